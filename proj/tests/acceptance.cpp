#include "coringlab/cli.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace coringlab;

namespace {

std::string corpus(const std::string& name) { return std::string(CORINGLAB_CORPUS_DIR) + "/" + name + ".json"; }

std::vector<std::string> corpus_files() {
    std::vector<std::string> out;
    for (const auto& e : std::filesystem::directory_iterator(CORINGLAB_CORPUS_DIR)) out.push_back(e.path().string());
    std::sort(out.begin(), out.end());
    return out;
}

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

bool broken_name(const std::string& n) { return n == "bad" || n.rfind("bad_", 0) == 0; }

LinearMap combine(const std::vector<LinearMap>& basis, std::mt19937& rng, LinearMap out) {
    std::uniform_int_distribution<int> coef(-3, 3);
    for (const auto& b : basis) out = out + Scalar(coef(rng)) * b;
    return out;
}

std::vector<std::pair<std::string, Cowreath>> corpus_cowreaths() {
    std::vector<std::pair<std::string, Cowreath>> out;
    for (const auto& f : corpus_files()) {
        auto s = load_session(f);
        for (const auto& [n, w] : s.cowreaths) out.push_back({std::filesystem::path(f).stem().string() + ":" + n, w});
    }
    return out;
}

Outcome axiom_suites() {
    Outcome o;
    int passed = 0, broken = 0;
    for (const auto& file : corpus_files()) {
        auto s = load_session(file);
        std::vector<std::pair<std::vector<std::string>, std::string>> runs;
        auto each = [&](const auto& entries, const std::string& kind, bool may_break) {
            for (const auto& [n, x] : entries) runs.push_back({{"check", kind, n}, may_break ? n : ""});
        };
        each(s.algebras, "algebra", false);
        each(s.bimodules, "bimodule", false);
        each(s.corings, "coring", true);
        each(s.comodules, "comodule", true);
        each(s.entwinings, "entwining", true);
        each(s.r_objects, "r-object", true);
        each(s.cowreaths, "cowreath", true);
        each(s.wreaths, "wreath", true);
        each(s.twistings, "twisting", true);
        for (const auto& [n, d] : s.skew_polys) runs.push_back({{"ore", "check", "--data", n, "--degree", "4"}, n});
        for (auto& [args, name] : runs) {
            std::vector<std::string> full{"--session", file, "--format", "json"};
            full.insert(full.end(), args.begin(), args.end());
            std::ostringstream out, err;
            int code = run_cli(full, out, err);
            std::string what = std::filesystem::path(file).filename().string() + " " + args[1] + " " + args.back();
            if (broken_name(name)) {
                auto j = nlohmann::json::parse(out.str());
                bool witnessed = code == 1;
                for (const auto& r : j["reports"])
                    if (r["status"] == "fail")
                        witnessed = witnessed && !r["witnesses"].empty() && !r["witnesses"][0]["equation"].get<std::string>().empty();
                o.require(witnessed, what + " should fail with a witness");
                ++broken;
            } else {
                o.require(code == 0, what + " exited with " + std::to_string(code));
                ++passed;
            }
        }
    }
    if (o.ok) o.detail = std::to_string(passed) + " structures pass, " + std::to_string(broken) + " broken variants fail with witnesses";
    return o;
}

Outcome cowreath_equivalence() {
    Outcome o;
    int total = 0, invalid = 0;
    for (const auto& [n, w] : corpus_cowreaths()) {
        bool concrete = check_cowreath(w).ok(), abstract = check_cowreath_abstract(w).ok();
        o.require(concrete == abstract, n + ": concrete and abstract checks disagree");
        ++total;
        invalid += !concrete;
    }
    o.require(total >= 6 && invalid >= 2, "too few cowreaths in the corpus");
    if (o.ok) o.detail = std::to_string(total) + " cowreaths, " + std::to_string(invalid) + " invalid, verdicts agree";
    return o;
}

Outcome flip_product() {
    Outcome o;
    auto s = load_session(corpus("flip_cowreath"));
    const auto& w = s.cowreaths.at("flip");
    const auto& c = *s.corings.at("C");
    const auto& d = *s.corings.at("D");
    auto p = cowreath_product(w);
    // tensor coalgebra: Delta(c (x) d) = c1 (x) d1 (x) c2 (x) d2 on raw coordinates
    Matrix dc = raw_matrix(c.comult), dd = raw_matrix(d.comult), ec = raw_matrix(c.counit), ed = raw_matrix(d.counit);
    std::size_t nc = c.carrier->dim(), nd = d.carrier->dim();
    Matrix hand(nc * nd * nc * nd, nc * nd), hand_eps(1, nc * nd);
    for (std::size_t x = 0; x < nc; ++x)
        for (std::size_t y = 0; y < nd; ++y) {
            hand_eps(0, x * nd + y) = ec(0, x) * ed(0, y);
            for (std::size_t c1 = 0; c1 < nc; ++c1)
                for (std::size_t c2 = 0; c2 < nc; ++c2)
                    for (std::size_t d1 = 0; d1 < nd; ++d1)
                        for (std::size_t d2 = 0; d2 < nd; ++d2)
                            hand(((c1 * nd + d1) * nc + c2) * nd + d2, x * nd + y) +=
                                dc(c1 * nc + c2, x) * dd(d1 * nd + d2, y);
        }
    o.require(raw_matrix(p->comult) == hand, "comultiplication differs from the tensor coalgebra");
    o.require(raw_matrix(p->counit) == hand_eps, "counit differs from the tensor coalgebra");
    int valid = 0;
    for (const auto& [n, x] : corpus_cowreaths()) {
        if (!check_cowreath(x).ok()) continue;
        auto q = cowreath_product(x);
        o.require(check_coring(*q).ok(), n + ": product is not a coring");
        o.require(check_coring_morphism(x.xi, *q, *x.obj.coring).ok(), n + ": xi is not a coring morphism");
        ++valid;
    }
    if (o.ok) o.detail = "flip product equals the tensor coalgebra; xi is a coring morphism on " + std::to_string(valid) + " cowreaths";
    return o;
}

Outcome adjunctions() {
    Outcome o;
    std::mt19937 rng(2024);
    int instances = 0, samples = 0;
    for (const auto& [n, w] : corpus_cowreaths()) {
        if (!check_cowreath(w).ok()) continue;
        auto p = cowreath_product(w);
        auto x = regular_comodule(w.obj.coring, Side::right);
        auto y = comodule_of_cow(p, regular_cow_comodule(w, Side::right));
        auto yxi = restrict_along_xi(w, y);
        auto xm = tensor_with_m(w, p, x);
        auto fs = colinear_basis(yxi, x);
        auto gs = colinear_basis(y, xm);
        o.require(!fs.empty() && !gs.empty(), n + ": no colinear maps to sample");
        for (int t = 0; t < 5 && o.ok; ++t) {
            auto f = combine(fs, rng, zero_map(y.carrier, x.carrier));
            auto g = adjunct_of(w, x, y, f);
            o.require(is_colinear(g, y, xm).ok() && adjunct_back(w, x, y, g) == f, n + ": hat then tilde is not the identity");
            auto g2 = combine(gs, rng, zero_map(y.carrier, xm.carrier));
            auto f2 = adjunct_back(w, x, y, g2);
            o.require(is_colinear(f2, yxi, x).ok() && adjunct_of(w, x, y, f2) == g2, n + ": tilde then hat is not the identity");
            samples += 2;
        }
        // R objects and comodules
        const RObject& ro = w.obj;
        auto z = regular_comodule(ro.coring, Side::right);
        auto wy = comodule_of_r_object(ro);
        auto vz = r_object_of_comodule(z);
        auto rg = colinear_basis(wy, z);
        auto rf = bicolinear_basis(r_object_bicomodule(ro), r_object_bicomodule(vz));
        o.require(!rg.empty() && !rf.empty(), n + ": no maps for the R object adjunction");
        for (int t = 0; t < 5 && o.ok; ++t) {
            auto g = combine(rg, rng, zero_map(wy.carrier, z.carrier));
            o.require(r_adjunct_back(ro, z, r_adjunct_of(ro, z, g)) == g, n + ": g-hat round trip");
            auto f = combine(rf, rng, zero_map(otimes(ro.coring->carrier, ro.carrier), otimes(z.coring->carrier, z.carrier)));
            o.require(r_adjunct_of(ro, z, r_adjunct_back(ro, z, f)) == f, n + ": f-tilde round trip");
            samples += 2;
        }
        ++instances;
    }
    if (o.ok) o.detail = std::to_string(samples) + " round trips over " + std::to_string(instances) + " cowreaths";
    return o;
}

Outcome lifts() {
    Outcome o;
    auto s = load_session(corpus("lifted_cowreaths"));
    for (auto [e, w, stored] : {std::tuple{"dk", "w_dk", "lift_dk"}, std::tuple{"flip", "w_flip", "lift_flip"}}) {
        const auto& ent = s.entwinings.at(e);
        auto lifted = lift_cowreath(ent, entwined_coring(ent), s.cowreaths.at(w));
        o.require(check_cowreath(lifted).ok(), std::string(e) + ": lifted cowreath fails its checks");
        o.require(check_coring(*cowreath_product(lifted)).ok(), std::string(e) + ": product of the lift is not a coring");
        o.require(lifted.delta.mat == s.cowreaths.at(stored).delta.mat, std::string(e) + ": stored lift differs");
    }
    if (o.ok) o.detail = "Doi-Koppinen and flip lifts pass, products are corings";
    return o;
}

Outcome twisted_products() {
    Outcome o;
    auto s = load_session(corpus("sign_flip_ttp"));
    const auto& t = s.twistings.at("sign");
    auto tt = twisted_tensor_product(t.r, t.t, t.twist);
    const FinAlgebra& a = *tt.product_t->total;
    int triples = 0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k) {
                auto lhs = a.product(a.basis_product(i, j), a.basis_vector(k));
                auto rhs = a.product(a.basis_vector(i), a.basis_product(j, k));
                o.require(lhs == rhs, "associativity fails");
                ++triples;
            }
    o.require(triples == 64, "expected 64 triples");
    // y at index 2, x at index 1
    auto xy = a.basis_product(1, 2), yx = a.basis_product(2, 1);
    std::vector<Scalar> neg;
    for (const auto& v : yx) neg.push_back(-v);
    o.require(xy == neg && xy != yx, "x and y do not anticommute");
    o.require(a.mult() == tt.product_r->total->mult() && a.unit() == tt.product_r->total->unit(),
              "the two wreath views differ");
    if (o.ok) o.detail = "64 triples associative, x y = -y x, both wreath views agree";
    return o;
}

Outcome ore() {
    Outcome o;
    for (auto f : {"ore_commutative", "ore_weyl", "ore_quantum"}) {
        auto s = load_session(corpus(f));
        const auto& d = s.skew_polys.at("D");
        o.require(ore_vs_wreath_product(d, 4).ok(), std::string(f) + ": wreath product disagrees");
        OreTwistTable table(d, 4);
        for (std::size_t n = 0; n <= 4; ++n)
            for (std::size_t b = 0; b < d.b->dim(); ++b)
                o.require(table.entry(n, b) == skew_mul(d, monomial(d, 0, n), monomial(d, b, 0)),
                          std::string(f) + ": table entry differs from Y^n b");
    }
    auto s = load_session(corpus("ore_weyl"));
    const auto& d = s.skew_polys.at("D");
    Field f = d.b->field();
    std::size_t n = d.b->dim();
    auto target = matrix_algebra(n, f);
    // b -> left multiplication by b, Y -> delta as matrices
    Matrix phi(n * n, n, f);
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t j = 0; j < n; ++j) {
            auto col = d.b->basis_product(b, j);
            for (std::size_t i = 0; i < n; ++i) phi(i * n + j, b) = col[i];
        }
    std::vector<Scalar> z(n * n, Scalar(0, f));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) z[i * n + j] = d.delta(i, j);
    o.require(check_ore_universal(d, {d.b, target, phi}, z, 4).ok(), "universal property fails for the Weyl case");
    if (o.ok) o.detail = "3 data sets agree to degree 4, table matches Y^n b, Weyl case maps into Mat3";
    return o;
}

Outcome module_twisting() {
    Outcome o;
    auto s = load_session(corpus("sign_flip_ttp"));
    const auto& t = s.twistings.at("sign");
    auto tt = twisted_tensor_product(t.r, t.t, t.twist);
    ModuleTwist m{regular_ring_module(t.r, Side::left), tt.twist, "R"};
    o.require(check_left_module_twisting(tt, m).ok(), "the twist on X = R is not a module twisting");
    auto y = regular_ring_module(t.t, Side::left);
    o.require(check_induced_action(tt, m, y).ok(), "induced action fails");
    o.require(check_ring_module(induced_action(tt, m, y)).ok(), "induced action is not a module");
    BimoduleTwist b{regular_ring_bimodule(t.r), regular_ring_bimodule(t.t), tt.twist, tt.twist, "R,T"};
    o.require(check_bimodule_twisting(tt, b).ok(), "Cap-6 fails for the paired instance");
    auto bad = b;
    // scale the image of x (x) y
    for (std::size_t i = 0; i < bad.v_twist.mat.rows(); ++i) bad.v_twist.mat(i, 3) *= Scalar(3);
    o.require(check_bimodule_twisting(tt, bad).failed("Cap-6"), "Cap-6 holds for the perturbed instance");
    if (o.ok) o.detail = "module twisting and induced action pass, Cap-6 holds and fails when perturbed";
    return o;
}

Outcome infrastructure() {
    Outcome o;
    int files = 0;
    for (const auto& f : corpus_files()) {
        std::ifstream in(f);
        std::stringstream ss;
        ss << in.rdbuf();
        auto text = serialize_session(parse_session(ss.str()));
        o.require(text == ss.str() && serialize_session(parse_session(text)) == text, f + ": round trip differs");
        ++files;
    }
    std::mt19937 rng(99);
    int matrices = 0;
    for (Field f : {Field::rationals(), Field::gf(2), Field::gf(3), Field::gf(101)}) {
        for (int k = 0; k < 100; ++k) {
            std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 7;
            std::uniform_int_distribution<int> entry(-3, 3);
            Matrix m(rows, cols, f);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar(rng() % 3 ? entry(rng) : 0, f);
            std::size_t r = rank(m);
            Matrix ker = kernel_basis(m);
            o.require(r + ker.cols() == cols, "rank-nullity fails");
            if (ker.cols()) {
                o.require((m * ker).is_zero(), "kernel vectors are not in the kernel");
                o.require(rank(ker) == ker.cols(), "kernel basis is dependent");
            }
            o.require(rank(m.transpose()) == r, "row and column rank differ");
            o.require(rref(m).pivots.size() == r, "pivot count differs from rank");
            Matrix v(cols, 1, f);
            for (std::size_t j = 0; j < cols; ++j) v(j, 0) = Scalar(entry(rng), f);
            auto sol = solve(m, m * v);
            o.require(sol && m * *sol == m * v, "solve misses a consistent system");
            ++matrices;
        }
    }
    if (o.ok) o.detail = std::to_string(files) + " corpus files round trip, " + std::to_string(matrices) + " matrices over 4 fields";
    return o;
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 axiom suites", axiom_suites},
        {"2 concrete and abstract cowreath checks", cowreath_equivalence},
        {"3 cowreath product of the flip cowreath", flip_product},
        {"4 adjunction round trips", adjunctions},
        {"5 lifted cowreaths", lifts},
        {"6 sign-flip twisted tensor product", twisted_products},
        {"7 Ore extensions", ore},
        {"8 module twisting maps", module_twisting},
        {"9 serialization and exact linear algebra", infrastructure},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail << "\n";
        failed += !o.ok;
    }
    return failed ? 1 : 0;
}
