#pragma once
#include <gerstlab/algebra.hpp>
#include <gerstlab/bialg.hpp>
#include <gerstlab/cochain.hpp>
#include <gerstlab/ginfty.hpp>
#include <gerstlab/hopf.hpp>
#include <gerstlab/poly.hpp>

#include <json.hpp>

#include <string>

namespace gerstlab {

using json = nlohmann::json;

// Rationals serialize as "p/q" (or "p" when q = 1) everywhere.
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json algebra_to_json(const Algebra& A);
Algebra algebra_from_json(const json& j);

json cochain_to_json(const Cochain& c);
Cochain cochain_from_json(const json& j, const Algebra& A);

json polyvector_to_json(const Polyvector& v);
Polyvector polyvector_from_json(const json& j);
json diff_form_to_json(const DiffForm& v);
DiffForm diff_form_from_json(const json& j);

json ginfty_to_json(const GinftyStructure& g);
GinftyStructure ginfty_from_json(const json& j);

json lie_bialgebra_to_json(const LieBialgebra& g);
LieBialgebra lie_bialgebra_from_json(const json& j);

json bialgebra_to_json(const FinBialgebra& h);
FinBialgebra bialgebra_from_json(const json& j);

json load_json_file(const std::string& path);

}  // namespace gerstlab
