#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "dainf/cobar.hpp"
#include "dainf/cooperad.hpp"
#include "dainf/json_io.hpp"

using namespace dainf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitInputError = 2;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << canonical_dump(j);
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
        out << canonical_dump(j);
    }
}

CoefficientRing ring_option(const std::string& flag) {
    if (!flag.empty()) return CoefficientRing::parse(flag);
    if (const char* env = std::getenv("DAINF_RING")) return CoefficientRing::parse(env);
    return CoefficientRing::Q();
}

int report_outcome(const RelationReport& rep, const char* relation, bool as_json) {
    if (as_json)
        std::cout << canonical_dump(relation_report_to_json(rep, relation));
    else
        std::cout << rep.to_string(relation) << "\n";
    return rep.ok() ? kExitOk : kExitMathFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"derived A-infinity operad calculator"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable reports");

    std::string file, file2, file3, out_path, ring_flag, level = "E1", pcase = "A";
    int u = 0, v = 1, arity = 3, hmax = 3, wn = 1, wi = 0, cap = 4, pk = 0, pn = 0;
    long long hs = 0, hr = 0;
    bool with_trivial = false, serial = false;

    auto* c_check = app.add_subcommand("check", "structure relation residuals of a structure file");
    c_check->add_option("file", file)->required();

    auto* c_classify = app.add_subcommand("classify", "support-based class of a structure file");
    c_classify->add_option("file", file)->required();

    auto* c_mcheck = app.add_subcommand("morphism-check", "morphism relation residuals");
    c_mcheck->add_option("file", file)->required();

    auto* c_compose = app.add_subcommand("compose", "compose two morphism files (apply first, then second)");
    c_compose->add_option("first", file)->required();
    c_compose->add_option("second", file2)->required();
    c_compose->add_option("-o,--out", out_path);

    auto* c_equiv = app.add_subcommand("equiv", "E1/E2 equivalence of a morphism file");
    c_equiv->add_option("--level", level)->check(CLI::IsMember({"E1", "E2"}));
    c_equiv->add_option("file", file)->required();

    auto* c_cocompose = app.add_subcommand("cocompose", "full cocomposition of mu(u,v)");
    c_cocompose->add_option("u", u)->required();
    c_cocompose->add_option("v", v)->required();

    auto* c_inf = app.add_subcommand("infcocompose", "infinitesimal cocomposition of mu(u,v)");
    c_inf->add_option("u", u)->required();
    c_inf->add_option("v", v)->required();
    c_inf->add_flag("--with-trivial", with_trivial, "include identity outer/middle factors");

    auto* c_cobar = app.add_subcommand("cobar", "differential of the generator m(u,v)");
    c_cobar->add_option("u", u)->required();
    c_cobar->add_option("v", v)->required();

    auto* c_d2 = app.add_subcommand("d2", "verify the differential squares to zero on a window");
    c_d2->add_option("--arity", arity);
    c_d2->add_option("--hmax", hmax);
    c_d2->add_flag("--serial", serial, "reference single-thread sweep");

    auto* c_window = app.add_subcommand("koszul-window",
                                        "homology of the operad in one (arity, degree) window");
    c_window->add_option("n", wn)->required();
    c_window->add_option("i", wi)->required();
    c_window->add_option("--ring", ring_flag, "Q or Fp:<p> (default: DAINF_RING or Q)");

    auto* c_transfer = app.add_subcommand("transfer", "homotopy transfer along a retract file");
    c_transfer->add_option("--cap", cap, "produce operations with i+j <= cap");
    c_transfer->add_option("file", file)->required();
    c_transfer->add_option("-o,--out", out_path);

    auto* c_hh = app.add_subcommand("hh", "bigraded Hochschild cohomology dimension");
    c_hh->add_option("--s", hs)->required();
    c_hh->add_option("--r", hr)->required();
    c_hh->add_option("file", file)->required();

    auto* c_mc = app.add_subcommand("mc", "Maurer-Cartan residual of a twisting cochain");
    c_mc->add_option("structure", file)->required();
    c_mc->add_option("cochain", file2)->required();

    auto* c_perturb = app.add_subcommand("perturb", "perturb a twisting cochain at one position");
    c_perturb->add_option("--case", pcase)->check(CLI::IsMember({"A", "B"}));
    c_perturb->add_option("--k", pk)->required();
    c_perturb->add_option("--n", pn)->required();
    c_perturb->add_option("structure", file)->required();
    c_perturb->add_option("cochain", file2)->required();
    c_perturb->add_option("b", file3)->required();
    c_perturb->add_option("-o,--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_check) {
            DAInfStructure s = structure_from_json(read_json_file(file));
            return report_outcome(check_structure(s), "structure", as_json);
        }
        if (*c_classify) {
            DAInfStructure s = structure_from_json(read_json_file(file));
            auto rep = check_structure(s);
            if (!rep.ok()) {
                if (as_json)
                    std::cout << canonical_dump(relation_report_to_json(rep, "structure"));
                else
                    std::cout << rep.to_string("structure") << "\n";
                return kExitMathFailure;
            }
            const char* cls = to_string(classify(s));
            if (as_json)
                std::cout << canonical_dump(json{{"class", cls}});
            else
                std::cout << cls << "\n";
            return kExitOk;
        }
        if (*c_mcheck) {
            InfMorphism f = morphism_from_json(read_json_file(file));
            return report_outcome(check_morphism(f), "morphism", as_json);
        }
        if (*c_compose) {
            InfMorphism f = morphism_from_json(read_json_file(file));
            InfMorphism g = morphism_from_json(read_json_file(file2));
            InfMorphism gf = compose_morphisms(g, f);
            emit(morphism_to_json(gf), out_path);
            return kExitOk;
        }
        if (*c_equiv) {
            InfMorphism f = morphism_from_json(read_json_file(file));
            const bool is = check_equivalence(
                f, level == "E1" ? EquivalenceLevel::E1 : EquivalenceLevel::E2);
            if (as_json)
                std::cout << canonical_dump(json{{"level", level}, {"equivalence", is}});
            else
                std::cout << level << "-equivalence: " << (is ? "yes" : "no") << "\n";
            return is ? kExitOk : kExitMathFailure;
        }
        if (*c_cocompose) {
            auto terms = cocompose(u, v);
            if (as_json) {
                json arr = json::array();
                for (const auto& t : terms) {
                    json inner = json::array();
                    for (const auto& g : t.inner) inner.push_back({{"i", g.i}, {"j", g.j}});
                    arr.push_back({{"coeff", t.coeff},
                                   {"outer", {{"i", t.outer.i}, {"j", t.outer.j}}},
                                   {"inner", inner}});
                }
                std::cout << canonical_dump(arr);
            } else {
                for (const auto& t : terms) std::cout << t.to_string() << "\n";
            }
            return kExitOk;
        }
        if (*c_inf) {
            auto terms = infinitesimal_cocompose(u, v, with_trivial);
            if (as_json) {
                json arr = json::array();
                for (const auto& t : terms)
                    arr.push_back({{"coeff", t.coeff},
                                   {"outer", {{"i", t.outer.i}, {"j", t.outer.j}}},
                                   {"r", t.r},
                                   {"mid", {{"i", t.mid.i}, {"j", t.mid.j}}},
                                   {"t", t.t}});
                std::cout << canonical_dump(arr);
            } else {
                for (const auto& t : terms) std::cout << t.to_string() << "\n";
            }
            return kExitOk;
        }
        if (*c_cobar) {
            TermSum d = cobar_diff_generator(u, v);
            if (as_json) {
                json arr = json::array();
                for (const auto& [t, c] : d.terms())
                    arr.push_back({{"coeff", c.to_string()}, {"term", t.to_string()}});
                std::cout << canonical_dump(arr);
            } else {
                std::cout << d.to_string() << "\n";
            }
            return kExitOk;
        }
        if (*c_d2) {
            D2Report rep = check_d_squared(arity, hmax, !serial);
            if (as_json) {
                json counts = json::array();
                for (const auto& [key, n] : rep.counts)
                    counts.push_back({{"arity", key.first}, {"h", key.second}, {"trees", n}});
                std::cout << canonical_dump(json{{"ok", rep.ok},
                                                 {"trees_checked", rep.trees_checked},
                                                 {"counts", counts},
                                                 {"first_failure", rep.first_failure}});
            } else {
                std::cout << (rep.ok ? "d^2 = 0 on " : "d^2 != 0; first failure among ")
                          << rep.trees_checked << " basis trees (arity <= " << arity
                          << ", h <= " << hmax << ")\n";
                if (!rep.ok) std::cout << "offending tree: " << rep.first_failure << "\n";
            }
            return rep.ok ? kExitOk : kExitMathFailure;
        }
        if (*c_window) {
            CoefficientRing ring = ring_option(ring_flag);
            auto hom = homology_window(wn, wi, ring);
            if (as_json) {
                json arr = json::array();
                for (const auto& [jdeg, dim] : hom)
                    arr.push_back({{"v", jdeg}, {"dim", dim}});
                std::cout << canonical_dump(json{{"n", wn}, {"i", wi},
                                                 {"ring", ring_to_json(ring)},
                                                 {"dimensions", arr}});
            } else {
                std::cout << "homology of the (n=" << wn << ", i=" << wi << ") window over "
                          << ring.describe() << ":\n";
                for (const auto& [jdeg, dim] : hom)
                    std::cout << "  vertical " << jdeg << ": " << dim << "\n";
            }
            return kExitOk;
        }
        if (*c_transfer) {
            HomotopyRetract r = retract_from_json(read_json_file(file));
            DAInfStructure t = transfer(r, cap);
            auto rep = check_structure(t, cap);
            if (!rep.ok()) {
                std::cout << rep.to_string("transferred structure") << "\n";
                return kExitMathFailure;
            }
            emit(structure_to_json(t), out_path);
            return kExitOk;
        }
        if (*c_hh) {
            DAInfStructure s = structure_from_json(read_json_file(file));
            long long dim = hh_bigraded(s, hs, hr);
            if (as_json)
                std::cout << canonical_dump(json{{"s", hs}, {"r", hr}, {"dim", dim}});
            else
                std::cout << "hh^{" << hs << "," << hr << "} has dimension " << dim << "\n";
            return kExitOk;
        }
        if (*c_mc) {
            DAInfStructure s = structure_from_json(read_json_file(file));
            HochschildElement a = cochain_from_json(read_json_file(file2), s.carrier());
            TwistingCochain t(s, std::move(a));
            HochschildElement res = mc_residual(t);
            if (as_json) {
                json comps = json::array();
                for (const auto& [nk, m] : res.components()) {
                    (void)m;
                    comps.push_back({{"i", nk.second}, {"j", nk.first}});
                }
                std::cout << canonical_dump(
                    json{{"twisting_cochain", res.is_zero()}, {"nonzero_components", comps}});
            } else if (res.is_zero()) {
                std::cout << "Maurer-Cartan residual vanishes: twisting cochain\n";
            } else {
                std::cout << "Maurer-Cartan residual is nonzero at";
                for (const auto& [nk, m] : res.components()) {
                    (void)m;
                    std::cout << " (i,j)=(" << nk.second << "," << nk.first << ")";
                }
                std::cout << "\n";
            }
            return res.is_zero() ? kExitOk : kExitMathFailure;
        }
        if (*c_perturb) {
            DAInfStructure s = structure_from_json(read_json_file(file));
            HochschildElement a = cochain_from_json(read_json_file(file2), s.carrier());
            HochschildElement b = cochain_from_json(read_json_file(file3), s.carrier());
            TwistingCochain t(s, std::move(a));
            PerturbResult res =
                perturb(t, b, pcase == "A" ? PerturbCase::A : PerturbCase::B, pk, pn);
            HochschildElement out(s.carrier(), 2);
            for (const auto& [uv, m] : res.components)
                if (!m.is_zero()) out.set_component(uv.second, uv.first, m);
            emit(cochain_to_json(out), out_path);
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const json::exception& e) {
        std::cerr << "input error: malformed JSON: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
