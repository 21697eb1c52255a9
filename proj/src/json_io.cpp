#include "dainf/json_io.hpp"

#include <stdexcept>

namespace dainf {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw std::invalid_argument(where + ": " + what);
}

const json& need(const json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
    return *it;
}

std::string need_string(const json& j, const char* key, const std::string& where) {
    const json& v = need(j, key, where);
    if (!v.is_string()) fail(where + "." + key, "expected a string");
    return v.get<std::string>();
}

long long need_int(const json& j, const char* key, const std::string& where) {
    const json& v = need(j, key, where);
    if (!v.is_number_integer()) fail(where + "." + key, "expected an integer");
    return v.get<long long>();
}

BigradedModule basis_from_json(const json& j, const CoefficientRing& ring,
                               const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of basis elements");
    std::vector<BasisElement> basis;
    for (size_t k = 0; k < j.size(); ++k) {
        const std::string at = where + "[" + std::to_string(k) + "]";
        const json& b = j[k];
        basis.push_back({need_string(b, "name", at),
                         {need_int(b, "h", at), need_int(b, "v", at)}});
    }
    try {
        return BigradedModule(ring, std::move(basis));
    } catch (const std::invalid_argument& e) {
        fail(where, e.what());
    }
}

json basis_to_json(const BigradedModule& m) {
    json arr = json::array();
    for (const auto& b : m.basis())
        arr.push_back({{"name", b.name}, {"h", b.deg.h}, {"v", b.deg.v}});
    return arr;
}

// shared entry shape: {"inputs": [names], "output": name, "coeff": "..."}
void load_entries(const json& j, BigradedMap& into, int arity, const BigradedModule& src_factor,
                  const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of entries");
    const CoefficientRing& ring = into.ring();
    for (size_t k = 0; k < j.size(); ++k) {
        const std::string at = where + "[" + std::to_string(k) + "]";
        const json& e = j[k];
        const json& inputs = need(e, "inputs", at);
        if (!inputs.is_array() || static_cast<int>(inputs.size()) != arity)
            fail(at, "expected " + std::to_string(arity) + " input name(s)");
        std::string src_name;
        for (size_t z = 0; z < inputs.size(); ++z) {
            if (!inputs[z].is_string()) fail(at, "input names must be strings");
            const std::string name = inputs[z].get<std::string>();
            if (src_factor.index_of(name) < 0) fail(at, "unknown basis name '" + name + "'");
            src_name += (z ? "⊗" : "") + name;
        }
        const std::string out = need_string(e, "output", at);
        if (into.target().index_of(out) < 0) fail(at, "unknown basis name '" + out + "'");
        Scalar c;
        try {
            c = Scalar::parse(ring, need_string(e, "coeff", at));
        } catch (const std::exception& ex) {
            fail(at + ".coeff", ex.what());
        }
        try {
            into.add_entry(out, src_name, c);
        } catch (const std::invalid_argument& ex) {
            fail(at, ex.what()); // bidegree violation, named per entry
        }
    }
}

json entries_to_json(const BigradedMap& m, int arity) {
    json arr = json::array();
    for (int col = 0; col < m.source().dim(); ++col) {
        auto column = m.column(col);
        std::sort(column.begin(), column.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [tgt, c] : column) {
            // split the flat tensor name back into factors
            json inputs = json::array();
            const std::string& flat = m.source().basis(col).name;
            size_t pos = 0;
            while (true) {
                size_t next = flat.find("⊗", pos);
                inputs.push_back(flat.substr(pos, next == std::string::npos ? next : next - pos));
                if (next == std::string::npos) break;
                pos = next + 3; // UTF-8 length of the separator
            }
            (void)arity;
            arr.push_back({{"inputs", inputs},
                           {"output", m.target().basis(tgt).name},
                           {"coeff", c.to_string()}});
        }
    }
    return arr;
}

DAInfStructure structure_from_json_inner(const json& j, const CoefficientRing& ring,
                                         const std::string& where) {
    BigradedModule carrier = basis_from_json(need(j, "basis", where), ring, where + ".basis");
    DAInfStructure s(std::move(carrier));
    const json& ops = need(j, "operations", where);
    if (!ops.is_array()) fail(where + ".operations", "expected an array");
    for (size_t k = 0; k < ops.size(); ++k) {
        const std::string at = where + ".operations[" + std::to_string(k) + "]";
        const json& op = ops[k];
        const int i = static_cast<int>(need_int(op, "i", at));
        const int jj = static_cast<int>(need_int(op, "j", at));
        if (i < 0 || jj < 1) fail(at, "operation index out of range");
        if (s.op(i, jj) != nullptr)
            fail(at, "duplicate operation (" + std::to_string(i) + "," + std::to_string(jj) + ")");
        BigradedMap m(s.power(jj), s.carrier(), {i, 2 - (i + jj)});
        load_entries(need(op, "entries", at), m, jj, s.carrier(), at + ".entries");
        try {
            s.set_op(i, jj, std::move(m));
        } catch (const std::invalid_argument& ex) {
            fail(at, ex.what());
        }
    }
    return s;
}

json structure_to_json_inner(const DAInfStructure& s) {
    json ops = json::array();
    for (const auto& [ij, m] : s.ops())
        ops.push_back(
            {{"i", ij.first}, {"j", ij.second}, {"entries", entries_to_json(m, ij.second)}});
    return {{"basis", basis_to_json(s.carrier())}, {"operations", ops}};
}

} // namespace

json ring_to_json(const CoefficientRing& r) {
    switch (r.kind) {
        case RingKind::integers: return {{"kind", "integers"}};
        case RingKind::rationals: return {{"kind", "rationals"}};
        case RingKind::prime_field: return {{"kind", "prime-field"}, {"p", r.p}};
    }
    return {};
}

CoefficientRing ring_from_json(const json& j) {
    const std::string kind = need_string(j, "kind", "ring");
    if (kind == "integers") return CoefficientRing::Z();
    if (kind == "rationals") return CoefficientRing::Q();
    if (kind == "prime-field") {
        try {
            return CoefficientRing::Fp(need_int(j, "p", "ring"));
        } catch (const std::invalid_argument& e) {
            fail("ring", e.what());
        }
    }
    fail("ring.kind", "expected integers | rationals | prime-field");
}

json structure_to_json(const DAInfStructure& s) {
    json j = structure_to_json_inner(s);
    j["ring"] = ring_to_json(s.ring());
    return j;
}

DAInfStructure structure_from_json(const json& j) {
    CoefficientRing ring = ring_from_json(need(j, "ring", "structure"));
    return structure_from_json_inner(j, ring, "structure");
}

json morphism_to_json(const InfMorphism& f) {
    json comps = json::array();
    for (const auto& [uv, m] : f.comps())
        comps.push_back(
            {{"i", uv.first}, {"j", uv.second}, {"entries", entries_to_json(m, uv.second)}});
    return {{"ring", ring_to_json(f.source().ring())},
            {"source", structure_to_json_inner(f.source())},
            {"target", structure_to_json_inner(f.target())},
            {"morphism", comps}};
}

InfMorphism morphism_from_json(const json& j) {
    CoefficientRing ring = ring_from_json(need(j, "ring", "morphism file"));
    DAInfStructure src = structure_from_json_inner(need(j, "source", "morphism file"), ring, "source");
    DAInfStructure tgt = structure_from_json_inner(need(j, "target", "morphism file"), ring, "target");
    InfMorphism f(std::move(src), std::move(tgt));
    const json& comps = need(j, "morphism", "morphism file");
    if (!comps.is_array()) fail("morphism", "expected an array");
    for (size_t k = 0; k < comps.size(); ++k) {
        const std::string at = "morphism[" + std::to_string(k) + "]";
        const json& c = comps[k];
        const int u = static_cast<int>(need_int(c, "i", at));
        const int v = static_cast<int>(need_int(c, "j", at));
        if (u < 0 || v < 1) fail(at, "component index out of range");
        if (f.comp(u, v) != nullptr)
            fail(at, "duplicate component (" + std::to_string(u) + "," + std::to_string(v) + ")");
        BigradedMap m(f.source().power(v), f.target().carrier(), {u, 1 - u - v});
        load_entries(need(c, "entries", at), m, v, f.source().carrier(), at + ".entries");
        try {
            f.set_comp(u, v, std::move(m));
        } catch (const std::invalid_argument& ex) {
            fail(at, ex.what());
        }
    }
    return f;
}

HomotopyRetract retract_from_json(const json& j) {
    CoefficientRing ring = ring_from_json(need(j, "ring", "retract file"));
    DAInfStructure w = structure_from_json_inner(need(j, "structure", "retract file"), ring,
                                                 "structure");
    BigradedModule v = basis_from_json(need(j, "v_basis", "retract file"), ring, "v_basis");
    BigradedMap incl(v, w.carrier(), {0, 0});
    load_entries(need(j, "incl", "retract file"), incl, 1, v, "incl");
    BigradedMap proj(w.carrier(), v, {0, 0});
    load_entries(need(j, "proj", "retract file"), proj, 1, w.carrier(), "proj");
    BigradedMap h(w.carrier(), w.carrier(), {0, -1});
    load_entries(need(j, "h", "retract file"), h, 1, w.carrier(), "h");
    try {
        return HomotopyRetract(std::move(w), std::move(v), std::move(incl), std::move(proj),
                               std::move(h));
    } catch (const std::invalid_argument& e) {
        fail("retract file", e.what());
    }
}

json cochain_to_json(const HochschildElement& e) {
    json comps = json::array();
    for (const auto& [nk, m] : e.components())
        comps.push_back(
            {{"i", nk.second}, {"j", nk.first}, {"entries", entries_to_json(m, nk.first)}});
    return {{"total", e.total_degree()}, {"components", comps}};
}

HochschildElement cochain_from_json(const json& j, const BigradedModule& carrier) {
    const long long total = need_int(j, "total", "cochain file");
    HochschildElement e(carrier, total);
    const json& comps = need(j, "components", "cochain file");
    if (!comps.is_array()) fail("components", "expected an array");
    for (size_t k = 0; k < comps.size(); ++k) {
        const std::string at = "components[" + std::to_string(k) + "]";
        const json& c = comps[k];
        const int i = static_cast<int>(need_int(c, "i", at));
        const int n = static_cast<int>(need_int(c, "j", at));
        if (n < 1) fail(at, "arity out of range");
        if (e.component(n, i) != nullptr)
            fail(at, "duplicate component (" + std::to_string(i) + "," + std::to_string(n) + ")");
        BigradedMap m(e.power(n), carrier, {i, total - n - i});
        load_entries(need(c, "entries", at), m, n, carrier, at + ".entries");
        try {
            e.set_component(n, i, std::move(m));
        } catch (const std::invalid_argument& ex) {
            fail(at, ex.what());
        }
    }
    return e;
}

std::string canonical_dump(const json& j) { return j.dump(1) + "\n"; }

json relation_report_to_json(const RelationReport& r, const char* relation) {
    json fails = json::array();
    for (const auto& [u, v] : r.failures) fails.push_back({{"u", u}, {"v", v}});
    return {{"relation", relation}, {"ok", r.ok()}, {"checked", r.checked}, {"failures", fails}};
}

} // namespace dainf
