#include "coringlab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <ostream>

namespace coringlab {

namespace {

using ojson = nlohmann::ordered_json;

ojson scalars(const std::vector<Scalar>& v) {
    ojson out = ojson::array();
    for (const auto& s : v) {
        if (s.field().p) out.push_back(s.residue());
        else out.push_back(s.str());
    }
    return out;
}

ojson to_json(const Report& r) {
    ojson j;
    j["check"] = r.check;
    j["target"] = r.target;
    j["status"] = to_string(r.status);
    j["checked"] = r.checked;
    ojson ws = ojson::array();
    for (const auto& w : r.witnesses) {
        ojson x;
        x["equation"] = w.equation;
        x["basis"] = w.basis;
        x["lhs"] = scalars(w.lhs);
        x["rhs"] = scalars(w.rhs);
        if (!w.note.empty()) x["note"] = w.note;
        ws.push_back(x);
    }
    j["witnesses"] = ws;
    if (!r.message.empty()) j["message"] = r.message;
    return j;
}

template <class M>
const typename M::mapped_type& lookup(const M& m, const std::string& name, const std::string& what) {
    auto it = m.find(name);
    if (it == m.end()) throw InputError("no " + what + " named '" + name + "'");
    return it->second;
}

struct Options {
    std::string session, format = "text", save;
    std::string kind, name, out, mode;
    std::vector<std::string> names;
    std::string data, cowreath, comodule, target, map;
    std::size_t degree = 4;
};

class Runner {
public:
    Runner(Options o, std::ostream& out) : o_(std::move(o)), out_(out) {}

    int run(const std::string& command) {
        if (o_.session.empty()) {
            if (const char* env = std::getenv("CORINGLAB_SESSION")) o_.session = env;
        }
        if (o_.session.empty()) throw InputError("no session file (use --session or CORINGLAB_SESSION)");
        s_ = load_session(o_.session);
        if (command == "check") check();
        else if (command == "build") build();
        else if (command == "ore") ore();
        else adjoint();
        return emit();
    }

private:
    void check() {
        const std::string& n = o_.name;
        const std::string& k = o_.kind;
        if (k == "algebra") add(check_algebra(*lookup(s_.algebras, n, "algebra")));
        else if (k == "bimodule") add(check_bimodule(*lookup(s_.bimodules, n, "bimodule")));
        else if (k == "coring") add(check_coring(*lookup(s_.corings, n, "coring")));
        else if (k == "comodule") add(check_comodule(lookup(s_.comodules, n, "comodule")));
        else if (k == "entwining") add(check_entwining(lookup(s_.entwinings, n, "entwining")));
        else if (k == "r-object") add(check_r_object(lookup(s_.r_objects, n, "R object")));
        else if (k == "cowreath") add(check_cowreath(lookup(s_.cowreaths, n, "cowreath")));
        else if (k == "wreath") add(check_wreath(lookup(s_.wreaths, n, "wreath")));
        else {
            const auto& t = lookup(s_.twistings, n, "twisting");
            add(check_ttp_laws(t.r, t.t, t.twist));
        }
        reports_.back().target = n;
    }

    void need_names(std::size_t n) {
        if (o_.names.size() != n)
            throw InputError("build " + o_.kind + " takes " + std::to_string(n) + " name" + (n > 1 ? "s" : ""));
        if (s_.has_name(o_.out)) throw InputError("name '" + o_.out + "' is already used");
    }

    // stops the build when a precondition fails
    bool require(Report r) {
        bool ok = r.ok();
        add(std::move(r));
        return ok;
    }

    void build() {
        const std::string& k = o_.kind;
        const std::string& out = o_.out;
        if (k == "entwined-coring") {
            need_names(1);
            const auto& e = lookup(s_.entwinings, o_.names[0], "entwining");
            if (!require(check_entwining(e))) return;
            auto c = entwined_coring(e);
            add(check_coring(*c));
            s_.add(out, c);
        } else if (k == "cowreath-product") {
            need_names(1);
            const auto& w = lookup(s_.cowreaths, o_.names[0], "cowreath");
            if (!require(check_cowreath(w))) return;
            auto p = cowreath_product(w);
            add(check_cowreath_product(w, p));
            s_.add(out, p);
        } else if (k == "wreath-product") {
            need_names(1);
            const auto& w = lookup(s_.wreaths, o_.names[0], "wreath");
            if (!require(check_wreath(w))) return;
            auto p = wreath_product(w);
            add(check_ring_extension(*p));
            s_.add(out, p->total);
            s_.add(out + "_over", p);
        } else if (k == "twisted-product") {
            need_names(1);
            const auto& t = lookup(s_.twistings, o_.names[0], "twisting");
            if (!require(check_ttp_laws(t.r, t.t, t.twist))) return;
            auto tt = twisted_tensor_product(t.r, t.t, t.twist);
            add(check_algebra(*tt.product_t->total));
            s_.add(out, tt.product_t->total);
        } else {
            need_names(2);
            const auto& e = lookup(s_.entwinings, o_.names[0], "entwining");
            const auto& w = lookup(s_.cowreaths, o_.names[1], "cowreath");
            if (w.obj.coring != e.coalgebra) throw InputError("the cowreath is not over the coalgebra of the entwining");
            if (!require(check_entwining(e)) || !require(check_cowreath(w))) return;
            auto c = entwined_coring(e);
            auto lifted = lift_cowreath(e, c, w);
            add(check_cowreath(lifted));
            s_.add(out + "_coring", c);
            s_.add(out, lifted);
        }
        reports_.back().target = out;
        built_ = true;
    }

    void ore() {
        const auto& d = lookup(s_.skew_polys, o_.data, "skew polynomial data");
        Report r = o_.mode == "check" ? check_ore_wreath(d, o_.degree) : ore_vs_wreath_product(d, o_.degree);
        r.target = o_.data;
        add(std::move(r));
    }

    void adjoint() {
        const auto& w = lookup(s_.cowreaths, o_.cowreath, "cowreath");
        const auto& x = lookup(s_.comodules, o_.comodule, "comodule");
        const auto& y = lookup(s_.comodules, o_.target, "comodule");
        const auto& f = lookup(s_.maps, o_.map, "map");
        if (x.side != Side::right || x.coring != w.obj.coring)
            throw InputError("'" + o_.comodule + "' is not a right comodule over the coring of the cowreath");
        if (y.side != Side::right) throw InputError("'" + o_.target + "' is not a right comodule");
        auto xm = tensor_with_m(w, y.coring, x);
        auto yxi = restrict_along_xi(w, y);
        Report r{"adjoint-" + o_.mode, o_.map};
        LinearMap result;
        if (o_.mode == "hat") {
            if (f.dom != y.carrier || f.cod != x.carrier) throw InputError("map must go from the target to the comodule");
            auto pre = is_colinear(f, yxi, x);
            if (!require(pre)) return;
            result = adjunct_of(w, x, y, f);
            r.merge(is_colinear(result, y, xm));
            expect_equal(r, "round-trip", adjunct_back(w, x, y, result), f);
        } else {
            if (f.dom != y.carrier || f.cod != xm.carrier)
                throw InputError("map must go from the target to the comodule tensored with M");
            auto pre = is_colinear(f, y, xm);
            if (!require(pre)) return;
            result = adjunct_back(w, x, y, f);
            r.merge(is_colinear(result, yxi, x));
            expect_equal(r, "round-trip", adjunct_of(w, x, y, result), f);
        }
        add(std::move(r));
        if (!o_.out.empty()) {
            if (s_.has_name(o_.out)) throw InputError("name '" + o_.out + "' is already used");
            s_.add(o_.out, result);
            built_ = true;
        }
    }

    void add(Report r) { reports_.push_back(std::move(r)); }

    int emit() {
        int code = 0;
        for (const auto& r : reports_) {
            if (r.status == Status::error) code = 2;
            else if (r.status == Status::fail && code == 0) code = 1;
        }
        if (built_ && code == 0) save_session(s_, o_.save.empty() ? o_.session : o_.save);
        if (o_.format == "json") {
            ojson j;
            j["status"] = code == 0 ? "pass" : code == 1 ? "fail" : "error";
            ojson rs = ojson::array();
            for (const auto& r : reports_) rs.push_back(to_json(r));
            j["reports"] = rs;
            out_ << j.dump(2) << "\n";
        } else {
            for (const auto& r : reports_) out_ << r.text();
        }
        return code;
    }

    Options o_;
    std::ostream& out_;
    Session s_;
    std::vector<Report> reports_;
    bool built_ = false;
};

}  // namespace

std::string report_json(const Report& r) { return to_json(r).dump(2); }

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact verification of corings, cowreaths, wreaths and Ore extensions", "coringlab"};
    app.option_defaults()->always_capture_default();
    app.add_option("--session", o.session, "session file (default $CORINGLAB_SESSION)");
    app.add_option("--format", o.format, "report format")->check(CLI::IsMember({"text", "json"}));
    app.require_subcommand(1);

    auto* check = app.add_subcommand("check", "run the axiom checks of a named object");
    check->add_option("kind", o.kind)->required()->check(CLI::IsMember(
        {"algebra", "bimodule", "coring", "comodule", "entwining", "r-object", "cowreath", "wreath", "twisting"}));
    check->add_option("name", o.name)->required();

    auto* build = app.add_subcommand("build", "build a product or lift and add it to the session");
    build->add_option("kind", o.kind)->required()->check(CLI::IsMember(
        {"entwined-coring", "cowreath-product", "wreath-product", "twisted-product", "lift"}));
    build->add_option("names", o.names)->required();
    build->add_option("--out", o.out, "name of the built object")->required();
    build->add_option("--save", o.save, "write the session here instead of back to --session");

    auto* ore = app.add_subcommand("ore", "degree-bounded Ore extension checks");
    ore->add_option("mode", o.mode)->required()->check(CLI::IsMember({"check", "compare"}));
    ore->add_option("--data", o.data)->required();
    ore->add_option("--degree", o.degree)->check(CLI::Range(0, 64));

    auto* adj = app.add_subcommand("adjoint", "transport a colinear map across the cowreath adjunction");
    adj->add_option("mode", o.mode)->required()->check(CLI::IsMember({"hat", "tilde"}));
    adj->add_option("--cowreath", o.cowreath)->required();
    adj->add_option("--comodule", o.comodule, "right comodule X over the coring")->required();
    adj->add_option("--target", o.target, "right comodule Y over the product coring")->required();
    adj->add_option("--map", o.map)->required();
    adj->add_option("--out", o.out, "store the transported map under this name");
    adj->add_option("--save", o.save);

    std::vector<const char*> argv{"coringlab"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    std::string command = app.get_subcommands().front()->get_name();
    try {
        return Runner(o, out).run(command);
    } catch (const std::exception& e) {
        if (o.format == "json") out << ojson{{"status", "error"}, {"message", e.what()}}.dump(2) << "\n";
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace coringlab
