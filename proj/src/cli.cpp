#include "gx/cli.hpp"

#include "gx/arf.hpp"
#include "gx/builtin.hpp"
#include "gx/cohomology.hpp"
#include "gx/g_group.hpp"
#include "gx/random.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gx {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text, std::ostream& out) {
    if (!path.parent_path().empty()) std::filesystem::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write " + path.string());
    f << text;
    out << "wrote " << path.string() << "\n";
}

Rat parse_rat_arg(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational " + s);
    }
}

Ring ring_arg(const std::string& s) {
    if (s == "z") return Ring::Z;
    if (s == "z2") return Ring::Z2;
    if (s == "z4") return Ring::Z4;
    if (s == "qz") return Ring::QZ;
    throw std::invalid_argument("unknown coefficient ring " + s);
}

std::string present(const AbelianGroupPresentation& p) {
    std::string s = p.to_string();
    if (p.circle_rank > 0) s += " (rational model of (R/Z)^" + std::to_string(p.circle_rank) + ")";
    return s;
}

ComplexPtr load_complex(const std::string& path) { return parse_complex(read_file(path)); }

Triple load_triple(const ComplexPtr& x, const std::string& path) { return parse_triple(read_file(path), x).triple; }

// Ops on group elements demand closed triples up front.
Triple load_cocycle_triple(const ComplexPtr& x, const std::string& path) {
    Triple g = load_triple(x, path);
    if (!big_d(g).is_zero()) throw std::invalid_argument(path + ": not a D-cocycle");
    return g;
}

Cochain load_cochain(const ComplexPtr& x, const std::string& path) { return parse_cochain(read_file(path), x).c; }

void print_triple(std::ostream& out, const std::string& name, const Triple& g) { out << emit_triple(name, g); }

void maybe_emit_triple(std::ostream& out, const std::string& dir, const std::string& name, const Triple& g) {
    if (dir.empty()) return;
    write_file(std::filesystem::path(dir) / (name + ".triple"), emit_triple(name, g), out);
}

// Complex text with the distinguished cycle appended when the complex itself
// carries none; coefficients repeat their term.
std::string example_complex_text(const NamedExample& ex) {
    std::string text = emit_complex(*ex.complex);
    if (ex.fundamental && ex.complex->attached_cycles().empty() && !ex.fundamental->terms().empty()) {
        std::ostringstream os;
        os << "cycle";
        for (const auto& [idx, co] : ex.fundamental->terms()) {
            const Simplex& s = ex.complex->simplex(ex.fundamental->degree(), idx);
            std::ostringstream term;
            term << (co > 0 ? "+" : "-");
            for (size_t i = 0; i < s.size(); ++i) {
                if (i) term << ",";
                term << ex.complex->vertex_name(s[i]);
            }
            for (Int k = 0; k < abs(co); ++k) os << " " << term.str();
        }
        os << "\n";
        text += os.str();
    }
    return text;
}

int run_verify_appendix(std::ostream& out) {
    AppendixReport rep = verify_appendix();
    for (const auto& s : rep.steps)
        out << (s.passed ? "[ok]   " : "[FAIL] ") << s.name << ": " << s.detail << "\n";
    out << "evaluation = " << rep.evaluation.str() << "\n";
    return rep.all_passed ? 0 : 1;
}

struct LawStats {
    long long trials = 0;
    long long failures = 0;
};

int run_verify_laws(uint64_t seed, int complexes, int trials, std::ostream& out) {
    Rng rng(seed);
    std::vector<ComplexPtr> xs;
    {
        std::vector<ComplexPtr> pinned = {simplex_boundary(3).complex, simplex_boundary(4).complex,
                                          rp2().complex, torus().complex};
        for (int i = 0; i < complexes; ++i)
            xs.push_back(i < static_cast<int>(pinned.size()) ? pinned[static_cast<size_t>(i)]
                                                             : random_complex(rng, 7, 4));
    }

    std::vector<std::pair<std::string, LawStats>> stats;
    auto tally = [&](const std::string& name, bool ok) {
        for (auto& [n, s] : stats)
            if (n == name) {
                ++s.trials;
                if (!ok) ++s.failures;
                return;
            }
        stats.push_back({name, {1, ok ? 0 : 1}});
    };

    auto rand_triple = [&](const ComplexPtr& x) {
        return Triple(random_cochain_qz8(rng, x, 3), random_cocycle_z2(rng, x, 2), random_cocycle_z2(rng, x, 1));
    };
    // products of closed factors: co-differential images, exact degree-three
    // parts, and bare degree-one cocycles
    auto rand_closed = [&](const ComplexPtr& x) {
        Triple g = Triple::zero(x);
        int parts = 1 + static_cast<int>(rng.next(3));
        for (int i = 0; i < parts; ++i) {
            switch (rng.next(3)) {
                case 0:
                    g = product(g, big_d_prime(random_cochain(rng, x, Ring::Z2, 1), random_cochain(rng, x, Ring::Z2, 0)));
                    break;
                case 1:
                    g = product(g, Triple(d(random_cochain_qz8(rng, x, 2)), Cochain(x, Ring::Z2, 2),
                                          Cochain(x, Ring::Z2, 1)));
                    break;
                default:
                    g = product(g, Triple(Cochain(x, Ring::QZ, 3), Cochain(x, Ring::Z2, 2),
                                          random_cocycle_z2(rng, x, 1)));
                    break;
            }
        }
        return g;
    };

    for (const auto& x : xs) {
        GroupContext ctx(x);
        Triple zero = Triple::zero(x);
        for (int trial = 0; trial < trials; ++trial) {
            Triple g1 = rand_triple(x), g2 = rand_triple(x), g3 = rand_triple(x);

            tally("differential additivity", big_d(product(g1, g2)) == big_d(g1) + big_d(g2));

            Cochain t1 = random_cochain(rng, x, Ring::Z2, 1), v1 = random_cochain(rng, x, Ring::Z2, 0);
            Cochain t2 = random_cochain(rng, x, Ring::Z2, 1), v2 = random_cochain(rng, x, Ring::Z2, 0);
            tally("co-differential multiplicativity",
                  ctx.cbar_equal(big_d_prime(t1 + t2 + cup(v1, d(v2)), v1 + v2),
                                 product(big_d_prime(t1, v1), big_d_prime(t2, v2))));

            tally("identity element", product(g1, zero) == g1 && product(zero, g1) == g1);
            tally("associativity", ctx.cbar_equal(product(product(g1, g2), g3), product(g1, product(g2, g3))));
            tally("inverses", ctx.cbar_equal(product(g1, inverse(g1)), zero) &&
                                  ctx.cbar_equal(product(inverse(g1), g1), zero));

            Cochain a2 = cup(g1.a, g1.a);
            Cochain bigA = special_lift(g1.a);
            Triple square(g1.w + g1.w - nth(cup(bigA, cup(bigA, bigA)), 4), a2, Cochain(x, Ring::Z2, 1));
            tally("square closed form", ctx.cbar_equal(power(g1, 2), square));

            Triple fourth(g1.w + g1.w + g1.w + g1.w + half(cup(g1.a, a2)), Cochain(x, Ring::Z2, 2),
                          Cochain(x, Ring::Z2, 1));
            tally("fourth power closed form", ctx.cbar_equal(power(g1, 4), fourth));

            Triple gen(Cochain(x, Ring::QZ, 3), Cochain(x, Ring::Z2, 2), random_cocycle_z2(rng, x, 1));
            tally("degree-one eight-torsion", ctx.cbar_equal(power(gen, 8), zero));

            Triple k1 = rand_closed(x), k2 = rand_closed(x);
            tally("commutator form",
                  ctx.g_equal(commutator(k1, k2), big_d_prime(cup1(k1.a, k2.a), Cochain(x, Ring::Z2, 0))));

            Cochain b = random_cocycle_z2(rng, x, 1);
            tally("twist involution", ctx.g_equal(chi(b, chi(b, k1)), k1));
            tally("twist at zero", chi(Cochain(x, Ring::Z2, 1), k1) == k1);

            tally("kapustin residual", kapustin_residual(g1) == big_d(g1));
        }
    }

    bool all = true;
    for (const auto& [name, s] : stats) {
        if (s.failures > 0) {
            out << "law " << name << ": " << s.failures << " of " << s.trials << " checks FAILED\n";
            all = false;
        } else {
            out << "law " << name << ": " << s.trials << " checks passed\n";
        }
    }
    out << (all ? "all laws passed\n" : "law failures detected\n");
    return all ? 0 : 1;
}

}  // namespace

CommandOutcome run(const std::vector<std::string>& argv) {
    CommandOutcome oc;
    std::ostringstream out;

    CLI::App app{"exact cochain-level computations of the dual bordism group"};
    app.name("gx");
    app.require_subcommand(1);

    std::string coeff = "qz";
    int deg = 0;
    std::string emit_dir;
    std::uint64_t seed = 1789;
    int law_complexes = 6;
    int law_trials = 5;
    long long bound = 64;
    long long exponent = 0;
    std::string spin_s = "0";
    std::string arf_s;

    auto* cohom = app.add_subcommand("cohom", "cohomology of a complex");
    std::string cohom_x;
    cohom->add_option("complex", cohom_x, "complex file")->required();
    cohom->add_option("--coeff", coeff, "coefficient ring")
        ->check(CLI::IsMember({"z", "z2", "z4", "qz"}))
        ->capture_default_str();
    cohom->add_option("--deg", deg, "degree")->required();

    auto* gstruct = app.add_subcommand("gstruct", "filtration structure of the group of a complex");
    std::string gstruct_x;
    gstruct->add_option("complex", gstruct_x, "complex file")->required();

    auto* op = app.add_subcommand("op", "operations on group elements");
    op->require_subcommand(1);

    std::string op_x, op_g1, op_g2, op_coc1, op_coc2;

    auto* op_product = op->add_subcommand("product", "product of two triples");
    op_product->add_option("complex", op_x, "complex file")->required();
    op_product->add_option("g1", op_g1, "triple file")->required();
    op_product->add_option("g2", op_g2, "triple file")->required();
    op_product->add_option("--emit", emit_dir, "write the result under this directory");

    auto* op_inverse = op->add_subcommand("inverse", "inverse of a triple");
    op_inverse->add_option("complex", op_x, "complex file")->required();
    op_inverse->add_option("g", op_g1, "triple file")->required();
    op_inverse->add_option("--emit", emit_dir, "write the result under this directory");

    auto* op_power = op->add_subcommand("power", "iterated product of a triple");
    op_power->add_option("complex", op_x, "complex file")->required();
    op_power->add_option("g", op_g1, "triple file")->required();
    op_power->add_option("n", exponent, "exponent, nonnegative")->required();
    op_power->add_option("--emit", emit_dir, "write the result under this directory");

    auto* op_isid = op->add_subcommand("is-identity", "whether a closed triple is trivial in the group");
    op_isid->add_option("complex", op_x, "complex file")->required();
    op_isid->add_option("g", op_g1, "triple file")->required();

    auto* op_equal = op->add_subcommand("equal", "whether two closed triples agree in the group");
    op_equal->add_option("complex", op_x, "complex file")->required();
    op_equal->add_option("g1", op_g1, "triple file")->required();
    op_equal->add_option("g2", op_g2, "triple file")->required();

    auto* op_order = op->add_subcommand("order", "order of a closed triple in the group");
    op_order->add_option("complex", op_x, "complex file")->required();
    op_order->add_option("g", op_g1, "triple file")->required();
    op_order->add_option("--bound", bound, "largest order tried")->capture_default_str();

    auto* op_comm = op->add_subcommand("commutator", "commutator of two triples");
    op_comm->add_option("complex", op_x, "complex file")->required();
    op_comm->add_option("g1", op_g1, "triple file")->required();
    op_comm->add_option("g2", op_g2, "triple file")->required();
    op_comm->add_option("--emit", emit_dir, "write the result under this directory");

    auto* op_chi = op->add_subcommand("chi", "twist of a triple by a degree-one cocycle");
    op_chi->add_option("complex", op_x, "complex file")->required();
    op_chi->add_option("g", op_g1, "triple file")->required();
    op_chi->add_option("b", op_coc1, "cochain file, degree-one cocycle over z2")->required();
    op_chi->add_option("--emit", emit_dir, "write the result under this directory");

    auto* op_kap = op->add_subcommand("kapustin", "change of variables into the quadratic-refinement form");
    op_kap->add_option("complex", op_x, "complex file")->required();
    op_kap->add_option("g", op_g1, "triple file")->required();
    op_kap->add_option("--emit", emit_dir, "write the result under this directory");

    auto* op_ext = op->add_subcommand("extension-cocycle", "extension class of two degree-one cocycles");
    op_ext->add_option("complex", op_x, "complex file")->required();
    op_ext->add_option("a", op_coc1, "cochain file, degree-one cocycle over z2")->required();
    op_ext->add_option("b", op_coc2, "cochain file, degree-one cocycle over z2")->required();
    op_ext->add_option("--emit", emit_dir, "write the result under this directory");

    auto* eval = app.add_subcommand("eval", "evaluate a closed triple against the fundamental cycle");
    std::string eval_x, eval_g, eval_t;
    eval->add_option("complex", eval_x, "complex file")->required();
    eval->add_option("g", eval_g, "triple file")->required();
    eval->add_option("t", eval_t, "transfer cochain file, degree one over z2")->required();
    eval->add_option("--spin", spin_s, "spin term")->check(CLI::IsMember({"0", "1/2"}))->capture_default_str();
    eval->add_option("--arf", arf_s, "arf correction as p/q, required when the degree-one part is nonzero");

    auto* arf_cmd = app.add_subcommand("arf", "invariant of a quadratic refinement");
    std::string arf_file;
    arf_cmd->add_option("form", arf_file, "quadratic form file")->required();

    auto* verify = app.add_subcommand("verify", "verification suites");
    verify->require_subcommand(1);
    auto* verify_appendix_cmd = verify->add_subcommand("appendix", "the worked bundle example, step by step");
    auto* verify_laws = verify->add_subcommand("laws", "randomized group-law suites");
    verify_laws->add_option("--seed", seed, "random seed")->capture_default_str();
    verify_laws->add_option("--complexes", law_complexes, "number of complexes")->capture_default_str();
    verify_laws->add_option("--trials", law_trials, "trials per complex")->capture_default_str();

    auto* subdivide = app.add_subcommand("subdivide", "barycentric subdivision of a complex");
    std::string subdivide_x;
    subdivide->add_option("complex", subdivide_x, "complex file")->required();
    subdivide->add_option("--emit", emit_dir, "write the subdivision under this directory");

    auto* builtin = app.add_subcommand("builtin", "ready-made complexes and their named cochains");
    std::string builtin_name;
    builtin->add_option("name", builtin_name, "one of sphere1, sphere2, sphere3, rp2, torus, tss2")->required();
    builtin->add_option("--emit", emit_dir, "write the complex and cochain files under this directory");

    std::vector<std::string> full;
    full.reserve(argv.size() + 1);
    full.push_back("gx");
    full.insert(full.end(), argv.begin(), argv.end());
    std::vector<const char*> ptrs;
    ptrs.reserve(full.size());
    for (const auto& s : full) ptrs.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(ptrs.size()), ptrs.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream err;
        int code = app.exit(e, out, err);
        out << err.str();
        oc.exit_code = code == 0 ? 0 : 2;
        oc.report = out.str();
        return oc;
    }

    int code = 0;
    try {
        if (cohom->parsed()) {
            auto x = load_complex(cohom_x);
            out << present(cohomology(x, ring_arg(coeff), deg)) << "\n";
        } else if (gstruct->parsed()) {
            auto x = load_complex(gstruct_x);
            GroupContext ctx(x);
            GStructureReport rep = ctx.structure_report();
            out << "complex: " << x->name() << "\n";
            out << "H^1(Z/2) dimension: " << rep.h1_dim << "\n";
            out << "SH^2 dimension: " << rep.sh2.size() << "\n";
            out << "H^3(Q/Z): " << present(rep.h3) << "\n";
            out << "alpha: " << rep.alpha.rows() << " x " << rep.alpha.cols() << "\n";
            for (int r = 0; r < rep.alpha.rows(); ++r) {
                out << "  ";
                for (int c = 0; c < rep.alpha.cols(); ++c) out << (rep.alpha.get(r, c) ? '1' : '0');
                out << "\n";
            }
            for (size_t i = 0; i < rep.z_table.size(); ++i)
                for (size_t j = 0; j < rep.z_table[i].size(); ++j) {
                    const FiltrationClass& fc = rep.z_table[i][j];
                    out << "z[" << i << "][" << j << "]: " << filtration_level_to_string(fc.level);
                    for (const Rat& r : fc.coordinates) out << " " << r.str();
                    out << "\n";
                }
        } else if (op_product->parsed()) {
            auto x = load_complex(op_x);
            Triple g = product(load_triple(x, op_g1), load_triple(x, op_g2));
            print_triple(out, "product", g);
            maybe_emit_triple(out, emit_dir, "product", g);
        } else if (op_inverse->parsed()) {
            auto x = load_complex(op_x);
            Triple g = inverse(load_triple(x, op_g1));
            print_triple(out, "inverse", g);
            maybe_emit_triple(out, emit_dir, "inverse", g);
        } else if (op_power->parsed()) {
            auto x = load_complex(op_x);
            Triple g = power(load_triple(x, op_g1), Int(exponent));
            print_triple(out, "power", g);
            maybe_emit_triple(out, emit_dir, "power", g);
        } else if (op_isid->parsed()) {
            auto x = load_complex(op_x);
            GroupContext ctx(x);
            out << (ctx.is_identity(load_cocycle_triple(x, op_g1)) ? "true" : "false") << "\n";
        } else if (op_equal->parsed()) {
            auto x = load_complex(op_x);
            GroupContext ctx(x);
            bool eq = ctx.g_equal(load_cocycle_triple(x, op_g1), load_cocycle_triple(x, op_g2));
            out << (eq ? "true" : "false") << "\n";
        } else if (op_order->parsed()) {
            auto x = load_complex(op_x);
            GroupContext ctx(x);
            auto ord = ctx.order(load_cocycle_triple(x, op_g1), Int(bound));
            if (ord)
                out << "order = " << ord->str() << "\n";
            else
                out << "order exceeds bound " << bound << "\n";
        } else if (op_comm->parsed()) {
            auto x = load_complex(op_x);
            Triple g = commutator(load_triple(x, op_g1), load_triple(x, op_g2));
            print_triple(out, "commutator", g);
            maybe_emit_triple(out, emit_dir, "commutator", g);
        } else if (op_chi->parsed()) {
            auto x = load_complex(op_x);
            Triple g = chi(load_cochain(x, op_coc1), load_triple(x, op_g1));
            print_triple(out, "chi", g);
            maybe_emit_triple(out, emit_dir, "chi", g);
        } else if (op_kap->parsed()) {
            auto x = load_complex(op_x);
            Triple g = kapustin_form(load_triple(x, op_g1));
            print_triple(out, "kapustin", g);
            maybe_emit_triple(out, emit_dir, "kapustin", g);
        } else if (op_ext->parsed()) {
            auto x = load_complex(op_x);
            Triple g = extension_cocycle(load_cochain(x, op_coc1), load_cochain(x, op_coc2));
            print_triple(out, "extension", g);
            maybe_emit_triple(out, emit_dir, "extension", g);
        } else if (eval->parsed()) {
            auto x = load_complex(eval_x);
            Triple g = load_cocycle_triple(x, eval_g);
            Cochain t = load_cochain(x, eval_t);
            Rat spin = spin_s == "1/2" ? Rat(1, 2) : Rat(0);
            std::optional<Rat> arf_term;
            if (!arf_s.empty()) arf_term = parse_rat_arg(arf_s);
            Rat v = evaluate_g1(g, fundamental_cycle(x), t, spin, arf_term);
            out << "value = " << v.str() << "\n";
        } else if (arf_cmd->parsed()) {
            NamedQuadForm f = parse_quadform(read_file(arf_file));
            ArfResult r = arf(f.form);
            if (r.degenerate)
                out << "degenerate\n";
            else
                out << "arf = " << r.value.str() << "\n";
        } else if (verify_appendix_cmd->parsed()) {
            code = run_verify_appendix(out);
        } else if (verify_laws->parsed()) {
            code = run_verify_laws(seed, law_complexes, law_trials, out);
        } else if (subdivide->parsed()) {
            auto x = load_complex(subdivide_x);
            Subdivision sd = barycentric_subdivision(x);
            out << "subdivision of " << x->name() << ": " << sd.complex->name() << "\n";
            out << "f-vector:";
            for (int k = 0; k <= sd.complex->top_dim(); ++k) out << " " << sd.complex->simplex_count(k);
            out << "\n";
            if (!emit_dir.empty())
                write_file(std::filesystem::path(emit_dir) / (x->name() + ".sd.osc"), emit_complex(*sd.complex),
                           out);
        } else if (builtin->parsed()) {
            NamedExample ex = builtin_example(builtin_name);
            out << ex.complex->name() << ": f-vector";
            for (int k = 0; k <= ex.complex->top_dim(); ++k) out << " " << ex.complex->simplex_count(k);
            out << "\n";
            if (ex.fundamental)
                out << "fundamental cycle: " << ex.fundamental->terms().size() << " cells\n";
            for (const auto& [nm, c] : ex.named_cochains) {
                int nonzero = 0;
                for (const Rat& v : c.dense())
                    if (v != 0) ++nonzero;
                out << "cochain " << nm << ": coeff " << ring_to_string(c.ring()) << " deg " << c.degree()
                    << " support " << nonzero << "\n";
            }
            if (!emit_dir.empty()) {
                auto dir = std::filesystem::path(emit_dir);
                write_file(dir / (ex.complex->name() + ".osc"), example_complex_text(ex), out);
                for (const auto& [nm, c] : ex.named_cochains)
                    write_file(dir / (ex.complex->name() + "." + nm + ".coc"), emit_cochain(nm, c), out);
            }
        }
    } catch (const std::invalid_argument& e) {
        out << "error: " << e.what() << "\n";
        code = 2;
    } catch (const std::runtime_error& e) {
        out << "error: " << e.what() << "\n";
        code = 2;
    } catch (const std::exception& e) {
        out << "internal error: " << e.what() << "\n";
        code = 2;
    }

    oc.exit_code = code;
    oc.report = out.str();
    return oc;
}

}  // namespace gx
