#include <gerstlab/json_io.hpp>

#include <fstream>

namespace gerstlab {

json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw input_error("scalar: expected \"p/q\" string or integer");
}

namespace {

Vec vec_from_json(const json& j, int dim) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim) throw input_error("vector length mismatch");
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = rational_from_json(j[i]);
    return v;
}

json vec_to_json(const Vec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rational_to_json(x));
    return a;
}

}  // namespace

json algebra_to_json(const Algebra& A) {
    json j;
    j["dim"] = A.dim();
    j["degrees"] = json::array();
    j["labels"] = json::array();
    for (int i = 0; i < A.dim(); ++i) {
        j["degrees"].push_back(A.degree(i));
        j["labels"].push_back(A.space().label(i));
    }
    j["unit"] = vec_to_json(A.unit());
    json table = json::array();
    for (int i = 0; i < A.dim(); ++i)
        for (int k = 0; k < A.dim(); ++k)
            for (const auto& [l, c] : A.mul_basis(i, k)) table.push_back(json::array({i, k, l, rational_to_json(c)}));
    j["table"] = table;
    if (A.has_trace()) j["trace"] = vec_to_json(A.trace_vector());
    return j;
}

Algebra algebra_from_json(const json& j) {
    if (!j.contains("dim")) throw input_error("algebra: missing dim");
    const int d = j.at("dim").get<int>();
    std::vector<int> degrees(d, 0);
    if (j.contains("degrees")) {
        if (static_cast<int>(j.at("degrees").size()) != d) throw input_error("algebra: degrees length mismatch");
        for (int i = 0; i < d; ++i) degrees[i] = j.at("degrees")[i].get<int>();
    }
    std::vector<std::string> labels;
    if (j.contains("labels"))
        for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
    else
        for (int i = 0; i < d; ++i) labels.push_back("e" + std::to_string(i));
    std::vector<std::tuple<int, int, int, Rational>> triples;
    for (const auto& row : j.at("table")) {
        if (!row.is_array() || row.size() != 4) throw input_error("algebra: table row must be [i,j,k,\"p/q\"]");
        triples.emplace_back(row[0].get<int>(), row[1].get<int>(), row[2].get<int>(), rational_from_json(row[3]));
    }
    Vec unit = vec_from_json(j.at("unit"), d);
    std::optional<Vec> trace;
    if (j.contains("trace")) trace = vec_from_json(j.at("trace"), d);
    return Algebra(GradedSpace(labels, degrees), triples, unit, trace);
}

json cochain_to_json(const Cochain& c) {
    json j;
    j["arity"] = c.arity();
    auto deg = c.internal_degree();
    j["internal_degree"] = deg ? *deg : 0;
    json entries = json::array();
    const int d = c.algebra().dim();
    std::vector<int> t(c.arity(), 0);
    size_t f = 0;
    do {
        const Vec& v = c.entry_flat(f);
        for (int k = 0; k < d; ++k)
            if (!v[k].is_zero()) {
                json row = json::array();
                for (int i : t) row.push_back(i);
                row.push_back(k);
                row.push_back(rational_to_json(v[k]));
                entries.push_back(row);
            }
        ++f;
    } while (tuple_next(t, d));
    j["entries"] = entries;
    return j;
}

Cochain cochain_from_json(const json& j, const Algebra& A) {
    const int arity = j.at("arity").get<int>();
    Cochain c(A, arity);
    for (const auto& row : j.at("entries")) {
        if (!row.is_array() || static_cast<int>(row.size()) != arity + 2)
            throw input_error("cochain: entry row must be [i1..in, k, \"p/q\"]");
        std::vector<int> t(arity);
        for (int i = 0; i < arity; ++i) t[i] = row[i].get<int>();
        const int out = row[arity].get<int>();
        if (out < 0 || out >= A.dim()) throw input_error("cochain: output index out of range");
        for (int i : t)
            if (i < 0 || i >= A.dim()) throw input_error("cochain: input index out of range");
        c.entry_mut(t)[out] += rational_from_json(row[arity + 1]);
    }
    if (j.contains("internal_degree")) {
        auto want = j.at("internal_degree").get<int>();
        auto got = c.internal_degree();
        if (!c.is_zero() && got && *got != want) throw input_error("cochain: internal_degree does not match entries");
    }
    return c;
}

namespace {

json ext_to_json(const ExteriorCore& v) {
    json j;
    j["nvars"] = v.nvars;
    j["exterior_degree"] = v.degree;
    json terms = json::array();
    for (const auto& [idx, p] : v.comps) {
        json t;
        t["indices"] = idx;
        json poly = json::array();
        for (const auto& [e, c] : p.terms()) {
            json mono;
            mono["exps"] = e;
            mono["coeff"] = rational_to_json(c);
            poly.push_back(mono);
        }
        t["poly"] = poly;
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

template <class T>
T ext_from_json(const json& j) {
    T v(j.at("nvars").get<int>(), j.at("exterior_degree").get<int>());
    for (const auto& t : j.at("terms")) {
        std::vector<int> idx;
        for (const auto& i : t.at("indices")) idx.push_back(i.get<int>());
        Poly p(v.nvars);
        for (const auto& mono : t.at("poly")) {
            std::vector<int> e;
            for (const auto& x : mono.at("exps")) e.push_back(x.get<int>());
            p.add_term(e, rational_from_json(mono.at("coeff")));
        }
        v.add(idx, p);
    }
    return v;
}

}  // namespace

json polyvector_to_json(const Polyvector& v) { return ext_to_json(v); }
Polyvector polyvector_from_json(const json& j) { return ext_from_json<Polyvector>(j); }
json diff_form_to_json(const DiffForm& v) { return ext_to_json(v); }
DiffForm diff_form_from_json(const json& j) { return ext_from_json<DiffForm>(j); }

json ginfty_to_json(const GinftyStructure& g) {
    json j;
    j["space"]["dim"] = g.space.dim();
    j["space"]["degrees"] = json::array();
    j["space"]["labels"] = json::array();
    for (int i = 0; i < g.space.dim(); ++i) {
        j["space"]["degrees"].push_back(g.space.degree(i));
        j["space"]["labels"].push_back(g.space.label(i));
    }
    json ops = json::array();
    for (const auto& op : g.ops) {
        json o;
        o["blocks"] = op.blocks;
        json entries = json::array();
        for (const auto& [t, v] : op.entries)
            for (int k = 0; k < g.space.dim(); ++k)
                if (!v[k].is_zero()) {
                    json row = json::array();
                    for (int i : t) row.push_back(i);
                    row.push_back(k);
                    row.push_back(rational_to_json(v[k]));
                    entries.push_back(row);
                }
        o["entries"] = entries;
        ops.push_back(o);
    }
    j["ops"] = ops;
    return j;
}

GinftyStructure ginfty_from_json(const json& j) {
    GinftyStructure g;
    const auto& sp = j.at("space");
    const int d = sp.at("dim").get<int>();
    std::vector<int> degrees(d, 0);
    if (sp.contains("degrees"))
        for (int i = 0; i < d; ++i) degrees[i] = sp.at("degrees")[i].get<int>();
    std::vector<std::string> labels;
    if (sp.contains("labels"))
        for (const auto& l : sp.at("labels")) labels.push_back(l.get<std::string>());
    else
        for (int i = 0; i < d; ++i) labels.push_back("a" + std::to_string(i));
    g.space = GradedSpace(labels, degrees);
    for (const auto& o : j.at("ops")) {
        GinftyOp op;
        for (const auto& b : o.at("blocks")) op.blocks.push_back(b.get<int>());
        int K = 0;
        for (int k : op.blocks) K += k;
        for (const auto& row : o.at("entries")) {
            if (static_cast<int>(row.size()) != K + 2) throw input_error("ginfty: entry row length mismatch");
            std::vector<int> t(K);
            for (int i = 0; i < K; ++i) t[i] = row[i].get<int>();
            const int out = row[K].get<int>();
            auto it = op.entries.find(t);
            if (it == op.entries.end()) it = op.entries.emplace(t, Vec(d)).first;
            it->second[out] += rational_from_json(row[K + 1]);
        }
        g.ops.push_back(std::move(op));
    }
    return g;
}

json lie_bialgebra_to_json(const LieBialgebra& g) {
    json j;
    j["dim"] = g.dim();
    j["degrees"] = json::array();
    j["labels"] = json::array();
    for (int i = 0; i < g.dim(); ++i) {
        j["degrees"].push_back(g.space.degree(i));
        j["labels"].push_back(g.space.label(i));
    }
    json br = json::array();
    for (int i = 0; i < g.dim(); ++i)
        for (int k = 0; k < g.dim(); ++k)
            for (const auto& [l, c] : g.bracket[i][k]) br.push_back(json::array({i, k, l, rational_to_json(c)}));
    j["bracket"] = br;
    json co = json::array();
    for (int i = 0; i < g.dim(); ++i)
        for (const auto& [a, b, c] : g.cobracket[i]) co.push_back(json::array({i, a, b, rational_to_json(c)}));
    j["cobracket"] = co;
    if (!g.differential.empty()) {
        json diff = json::array();
        for (int i = 0; i < g.dim(); ++i)
            for (const auto& [k, c] : g.differential[i]) diff.push_back(json::array({i, k, rational_to_json(c)}));
        j["differential"] = diff;
    }
    if (!g.filtration.empty()) j["filtration"] = g.filtration;
    return j;
}

LieBialgebra lie_bialgebra_from_json(const json& j) {
    LieBialgebra g;
    const int d = j.at("dim").get<int>();
    std::vector<int> degrees(d, 0);
    if (j.contains("degrees"))
        for (int i = 0; i < d; ++i) degrees[i] = j.at("degrees")[i].get<int>();
    std::vector<std::string> labels;
    if (j.contains("labels"))
        for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
    else
        for (int i = 0; i < d; ++i) labels.push_back("g" + std::to_string(i));
    g.space = GradedSpace(labels, degrees);
    g.bracket.assign(d, std::vector<SparseVec>(d));
    for (const auto& row : j.at("bracket")) {
        if (row.size() != 4) throw input_error("bialgebra: bracket row must be [i,j,k,\"p/q\"]");
        g.bracket[row[0].get<int>()][row[1].get<int>()].emplace_back(row[2].get<int>(), rational_from_json(row[3]));
    }
    g.cobracket.assign(d, {});
    for (const auto& row : j.at("cobracket")) {
        if (row.size() != 4) throw input_error("bialgebra: cobracket row must be [i,a,b,\"p/q\"]");
        g.cobracket[row[0].get<int>()].emplace_back(row[1].get<int>(), row[2].get<int>(), rational_from_json(row[3]));
    }
    if (j.contains("differential")) {
        g.differential.assign(d, {});
        for (const auto& row : j.at("differential"))
            g.differential[row[0].get<int>()].emplace_back(row[1].get<int>(), rational_from_json(row[2]));
    }
    if (j.contains("filtration"))
        for (const auto& f : j.at("filtration")) g.filtration.push_back(f.get<int>());
    return g;
}

json bialgebra_to_json(const FinBialgebra& h) {
    json j;
    j["dim"] = h.dim();
    j["degrees"] = json::array();
    j["labels"] = json::array();
    for (int i = 0; i < h.dim(); ++i) {
        j["degrees"].push_back(h.space.degree(i));
        j["labels"].push_back(h.space.label(i));
    }
    json mul = json::array();
    for (int i = 0; i < h.dim(); ++i)
        for (int k = 0; k < h.dim(); ++k)
            for (const auto& [l, c] : h.mul[i][k]) mul.push_back(json::array({i, k, l, rational_to_json(c)}));
    j["table"] = mul;
    json co = json::array();
    for (int i = 0; i < h.dim(); ++i)
        for (const auto& [a, b, c] : h.comul[i]) co.push_back(json::array({i, a, b, rational_to_json(c)}));
    j["coproduct"] = co;
    j["unit"] = vec_to_json(h.unit);
    j["counit"] = vec_to_json(h.counit);
    return j;
}

FinBialgebra bialgebra_from_json(const json& j) {
    FinBialgebra h;
    const int d = j.at("dim").get<int>();
    std::vector<int> degrees(d, 0);
    if (j.contains("degrees"))
        for (int i = 0; i < d; ++i) degrees[i] = j.at("degrees")[i].get<int>();
    std::vector<std::string> labels;
    if (j.contains("labels"))
        for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
    else
        for (int i = 0; i < d; ++i) labels.push_back("h" + std::to_string(i));
    h.space = GradedSpace(labels, degrees);
    h.mul.assign(d, std::vector<SparseVec>(d));
    for (const auto& row : j.at("table"))
        h.mul[row[0].get<int>()][row[1].get<int>()].emplace_back(row[2].get<int>(), rational_from_json(row[3]));
    h.comul.assign(d, {});
    for (const auto& row : j.at("coproduct"))
        h.comul[row[0].get<int>()].emplace_back(row[1].get<int>(), row[2].get<int>(), rational_from_json(row[3]));
    h.unit = vec_from_json(j.at("unit"), d);
    h.counit = vec_from_json(j.at("counit"), d);
    return h;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw input_error("JSON parse error in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace gerstlab
