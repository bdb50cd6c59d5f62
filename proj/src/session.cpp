#include "coringlab/session.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace coringlab {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

[[noreturn]] void fail_at(const std::string& path, const std::string& msg) { throw InputError(path + ": " + msg); }

std::string sanitize(const std::string& s) {
    std::string out;
    for (char c : s) out += std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-' ? c : '_';
    if (out.empty() || out == "k") out = "x" + out;
    return out;
}

ojson scalar_json(const Scalar& s) {
    if (s.field().p) return s.residue();
    return s.str();
}

ojson vector_json(const std::vector<Scalar>& v) {
    ojson out = ojson::array();
    for (const auto& s : v) out.push_back(scalar_json(s));
    return out;
}

ojson matrix_json(const Matrix& m) {
    ojson out = ojson::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ojson row = ojson::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m(i, j)));
        out.push_back(row);
    }
    return out;
}

Scalar scalar_from(const json& j, Field f, const std::string& path) {
    try {
        if (j.is_number_integer()) return Scalar(j.get<long>(), f);
        if (j.is_string()) return Scalar::parse(j.get<std::string>(), f);
    } catch (const std::exception& e) {
        fail_at(path, e.what());
    }
    fail_at(path, "expected an integer or a \"p/q\" string");
}

const json& field_of(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) fail_at(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail_at(path, "missing field '" + key + "'");
    return *it;
}

std::string string_of(const json& j, const std::string& key, const std::string& path) {
    const json& v = field_of(j, key, path);
    if (!v.is_string()) fail_at(path + "/" + key, "expected a string");
    return v.get<std::string>();
}

std::size_t size_of(const json& j, const std::string& key, const std::string& path) {
    const json& v = field_of(j, key, path);
    if (!v.is_number_unsigned()) fail_at(path + "/" + key, "expected a non-negative integer");
    return v.get<std::size_t>();
}

std::vector<Scalar> vector_from(const json& j, std::size_t n, Field f, const std::string& path) {
    if (!j.is_array() || j.size() != n) fail_at(path, "expected an array of " + std::to_string(n) + " scalars");
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(scalar_from(j[i], f, path + "/" + std::to_string(i)));
    return out;
}

Matrix matrix_from(const json& j, std::size_t rows, std::size_t cols, Field f, const std::string& path) {
    std::string shape = std::to_string(rows) + "x" + std::to_string(cols);
    if (!j.is_array() || j.size() != rows) fail_at(path, "expected a " + shape + " matrix");
    Matrix m(rows, cols, f);
    for (std::size_t i = 0; i < rows; ++i) {
        std::string rp = path + "/" + std::to_string(i);
        if (!j[i].is_array() || j[i].size() != cols) fail_at(rp, "expected a row of " + std::to_string(cols) + " in a " + shape + " matrix");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = scalar_from(j[i][c], f, rp + "/" + std::to_string(c));
    }
    return m;
}

// arrays of scalars on one line, matrices one row per line
void pretty(const ojson& j, int indent, std::string& out) {
    auto pad = [&](int n) { out += std::string(static_cast<std::size_t>(n), ' '); };
    auto flat = [](const ojson& a) {
        return a.is_array() && std::all_of(a.begin(), a.end(), [](const ojson& x) { return x.is_primitive(); });
    };
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        std::size_t i = 0;
        for (auto it = j.begin(); it != j.end(); ++it, ++i) {
            pad(indent + 2);
            out += ojson(it.key()).dump() + ": ";
            pretty(it.value(), indent + 2, out);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        pad(indent);
        out += "}";
    } else if (flat(j)) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
        out += "]";
    } else if (j.is_array()) {
        if (j.empty()) {
            out += "[]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            pad(indent + 2);
            pretty(j[i], indent + 2, out);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        pad(indent);
        out += "]";
    } else {
        out += j.dump();
    }
}

bool same_r_object(const RObject& a, const RObject& b) {
    return a.coring == b.coring && a.carrier == b.carrier && a.twist == b.twist;
}

bool same_rt_object(const RTObject& a, const RTObject& b) {
    return a.ext == b.ext && a.carrier == b.carrier && a.twist == b.twist;
}

}  // namespace

bool Session::has_name(const std::string& n) const {
    return n == "k" || algebras.count(n) || bimodules.count(n) || corings.count(n) || comodules.count(n) ||
           entwinings.count(n) || r_objects.count(n) || cowreaths.count(n) || extensions.count(n) ||
           rt_objects.count(n) || wreaths.count(n) || twistings.count(n) || skew_polys.count(n) || maps.count(n);
}

std::string Session::fresh(const std::string& base) const {
    std::string b = sanitize(base);
    if (!has_name(b)) return b;
    for (int i = 2;; ++i)
        if (!has_name(b + "_" + std::to_string(i))) return b + "_" + std::to_string(i);
}

std::string Session::algebra_name(const AlgebraPtr& a) const {
    if (a == ground_field(field_)) return "k";
    for (const auto& [n, x] : algebras)
        if (x == a) return n;
    return {};
}

std::string Session::atom_name(const BimodulePtr& m) const {
    AlgebraPtr k = ground_field(field_);
    if (m == regular(k)) return "k";
    if (m == underlying(k)) return "|k|";
    for (const auto& [n, a] : algebras) {
        if (m == regular(a)) return n;
        if (m == underlying(a)) return "|" + n + "|";
    }
    for (const auto& [n, e] : extensions)
        if (e->carrier->atoms().size() == 1 && e->carrier->atoms()[0] == m) return "@" + n;
    for (const auto& [n, b] : bimodules)
        if (b == m) return n;
    return {};
}

std::string Session::extension_name(const ExtPtr& e) const {
    for (const auto& [n, x] : extensions)
        if (x == e) return n;
    return {};
}

std::string Session::coring_name(const CoringPtr& c) const {
    for (const auto& [n, x] : corings)
        if (x == c) return n;
    return {};
}

std::string Session::add(const std::string& name, const AlgebraPtr& a) {
    if (a->field() != field_) throw InputError("algebra " + a->name() + " is over " + a->field().name());
    if (auto n = algebra_name(a); !n.empty()) return n;
    std::string n = fresh(name);
    algebras[n] = a;
    return n;
}

std::string Session::add(const std::string& name, const BimodulePtr& m) {
    if (auto n = atom_name(m); !n.empty()) return n;
    add(name + "_left", m->left());
    add(name + "_right", m->right());
    std::string n = fresh(name);
    bimodules[n] = m;
    return n;
}

void Session::add_space(const std::string& owner, const SpacePtr& s) {
    for (std::size_t i = 0; i < s->atoms().size(); ++i) add(owner + "_atom" + std::to_string(i), s->atoms()[i]);
}

std::string Session::add(const std::string& name, const CoringPtr& c) {
    if (auto n = coring_name(c); !n.empty()) return n;
    add(name + "_base", c->base);
    add_space(name, c->carrier);
    std::string n = fresh(name);
    corings[n] = c;
    return n;
}

std::string Session::add(const std::string& name, const Comodule& m) {
    add(name + "_coring", m.coring);
    add_space(name, m.carrier);
    std::string n = fresh(name);
    comodules[n] = m;
    return n;
}

std::string Session::add(const std::string& name, const EntwiningStructure& e) {
    add(name + "_algebra", e.algebra);
    add(name + "_coalgebra", e.coalgebra);
    std::string n = fresh(name);
    entwinings[n] = e;
    return n;
}

std::string Session::add(const std::string& name, const RObject& o) {
    for (const auto& [n, x] : r_objects)
        if (same_r_object(x, o)) return n;
    add(name + "_coring", o.coring);
    add_space(name, o.carrier);
    std::string n = fresh(name);
    r_objects[n] = o;
    return n;
}

std::string Session::add(const std::string& name, const Cowreath& w) {
    add(name + "_object", w.obj);
    std::string n = fresh(name);
    cowreaths[n] = w;
    return n;
}

std::string Session::add(const std::string& name, const ExtPtr& e) {
    if (auto n = extension_name(e); !n.empty()) return n;
    add(name + "_base", e->base);
    add(name + "_total", e->total);
    std::string n = fresh(name);
    extensions[n] = e;
    return n;
}

std::string Session::add(const std::string& name, const RTObject& o) {
    for (const auto& [n, x] : rt_objects)
        if (same_rt_object(x, o)) return n;
    add(name + "_extension", o.ext);
    add_space(name, o.carrier);
    std::string n = fresh(name);
    rt_objects[n] = o;
    return n;
}

std::string Session::add(const std::string& name, const Wreath& w) {
    add(name + "_object", w.obj);
    std::string n = fresh(name);
    wreaths[n] = w;
    return n;
}

std::string Session::add(const std::string& name, const TwistData& t) {
    add(name + "_r", t.r);
    add(name + "_t", t.t);
    std::string n = fresh(name);
    twistings[n] = t;
    return n;
}

std::string Session::add(const std::string& name, const SkewPolyData& d) {
    add(name + "_algebra", d.b);
    std::string n = fresh(name);
    skew_polys[n] = d;
    return n;
}

std::string Session::add(const std::string& name, const LinearMap& f) {
    add_space(name + "_dom", f.dom);
    add_space(name + "_cod", f.cod);
    std::string n = fresh(name);
    maps[n] = f;
    return n;
}

struct SessionWriter {
    const Session& s;

    std::string need(const std::string& n, const std::string& what) const {
        if (n.empty()) throw InputError("unregistered " + what);
        return n;
    }
    ojson space_json(const SpacePtr& sp) const {
        ojson out = ojson::array();
        for (const auto& a : sp->atoms()) out.push_back(need(s.atom_name(a), "bimodule " + a->name()));
        return out;
    }
    std::string alg(const AlgebraPtr& a) const { return need(s.algebra_name(a), "algebra " + a->name()); }
    std::string ext(const ExtPtr& e) const { return need(s.extension_name(e), "extension " + e->name); }
    std::string cor(const CoringPtr& c) const { return need(s.coring_name(c), "coring " + c->name); }
    std::string r_obj(const RObject& o) const {
        for (const auto& [n, x] : s.r_objects)
            if (same_r_object(x, o)) return n;
        throw InputError("unregistered R object " + o.name);
    }
    std::string rt_obj(const RTObject& o) const {
        for (const auto& [n, x] : s.rt_objects)
            if (same_rt_object(x, o)) return n;
        throw InputError("unregistered R object " + o.name);
    }

    ojson write() const {
        ojson j;
        j["field"] = s.field_.name();
        auto section = [&](const char* key, const auto& entries, auto fn) {
            if (entries.empty()) return;
            ojson sec = ojson::object();
            for (const auto& [n, x] : entries) sec[n] = fn(x);
            j[key] = sec;
        };
        section("algebras", s.algebras, [&](const AlgebraPtr& a) {
            ojson o;
            o["dim"] = a->dim();
            o["mult"] = matrix_json(a->mult());
            o["unit"] = vector_json(a->unit());
            if (!a->labels().empty()) o["labels"] = a->labels();
            return o;
        });
        section("extensions", s.extensions, [&](const ExtPtr& e) {
            ojson o;
            o["base"] = alg(e->base);
            o["total"] = alg(e->total);
            o["iota"] = matrix_json(e->iota.matrix);
            return o;
        });
        section("bimodules", s.bimodules, [&](const BimodulePtr& m) {
            ojson o;
            o["left"] = alg(m->left());
            o["right"] = alg(m->right());
            o["dim"] = m->dim();
            ojson l = ojson::array(), r = ojson::array();
            for (std::size_t i = 0; i < m->left()->dim(); ++i) l.push_back(matrix_json(m->left_action(i)));
            for (std::size_t i = 0; i < m->right()->dim(); ++i) r.push_back(matrix_json(m->right_action(i)));
            o["left_action"] = l;
            o["right_action"] = r;
            return o;
        });
        section("corings", s.corings, [&](const CoringPtr& c) {
            ojson o;
            o["base"] = alg(c->base);
            o["carrier"] = space_json(c->carrier);
            o["comult"] = matrix_json(c->comult.mat);
            o["counit"] = matrix_json(c->counit.mat);
            return o;
        });
        section("comodules", s.comodules, [&](const Comodule& m) {
            ojson o;
            o["side"] = m.side == Side::left ? "left" : "right";
            o["coring"] = cor(m.coring);
            o["carrier"] = space_json(m.carrier);
            o["coaction"] = matrix_json(m.coaction.mat);
            return o;
        });
        section("entwinings", s.entwinings, [&](const EntwiningStructure& e) {
            ojson o;
            o["algebra"] = alg(e.algebra);
            o["coalgebra"] = cor(e.coalgebra);
            o["psi"] = matrix_json(e.psi.mat);
            return o;
        });
        section("r_objects", s.r_objects, [&](const RObject& r) {
            ojson o;
            o["coring"] = cor(r.coring);
            o["carrier"] = space_json(r.carrier);
            o["twist"] = matrix_json(r.twist.mat);
            return o;
        });
        section("cowreaths", s.cowreaths, [&](const Cowreath& w) {
            ojson o;
            o["object"] = r_obj(w.obj);
            o["xi"] = matrix_json(w.xi.mat);
            o["delta"] = matrix_json(w.delta.mat);
            return o;
        });
        section("rt_objects", s.rt_objects, [&](const RTObject& r) {
            ojson o;
            o["extension"] = ext(r.ext);
            o["carrier"] = space_json(r.carrier);
            o["twist"] = matrix_json(r.twist.mat);
            return o;
        });
        section("wreaths", s.wreaths, [&](const Wreath& w) {
            ojson o;
            o["object"] = rt_obj(w.obj);
            o["eta"] = matrix_json(w.eta.mat);
            o["mu"] = matrix_json(w.mu.mat);
            return o;
        });
        section("twistings", s.twistings, [&](const TwistData& t) {
            ojson o;
            o["r"] = ext(t.r);
            o["t"] = ext(t.t);
            o["twist"] = matrix_json(t.twist.mat);
            return o;
        });
        section("skew_polys", s.skew_polys, [&](const SkewPolyData& d) {
            ojson o;
            o["algebra"] = alg(d.b);
            o["sigma"] = matrix_json(d.sigma.matrix);
            o["delta"] = matrix_json(d.delta);
            return o;
        });
        section("maps", s.maps, [&](const LinearMap& f) {
            ojson o;
            o["dom"] = space_json(f.dom);
            o["cod"] = space_json(f.cod);
            o["matrix"] = matrix_json(f.mat);
            return o;
        });
        return j;
    }
};

namespace {

struct Reader {
    Session& s;
    Field f;

    AlgebraPtr alg(const std::string& n, const std::string& path) const {
        if (n == "k") return ground_field(f);
        auto it = s.algebras.find(n);
        if (it == s.algebras.end()) fail_at(path, "unknown algebra '" + n + "'");
        return it->second;
    }
    BimodulePtr atom(const std::string& n, const std::string& path) const {
        if (n == "k") return regular(ground_field(f));
        if (n == "|k|") return underlying(ground_field(f));
        if (n.size() > 2 && n.front() == '|' && n.back() == '|') return underlying(alg(n.substr(1, n.size() - 2), path));
        if (!n.empty() && n.front() == '@') {
            auto e = ext(n.substr(1), path);
            if (e->carrier->atoms().size() != 1) fail_at(path, "extension '" + n.substr(1) + "' has a composite carrier");
            return e->carrier->atoms()[0];
        }
        if (auto it = s.algebras.find(n); it != s.algebras.end()) return regular(it->second);
        if (auto it = s.bimodules.find(n); it != s.bimodules.end()) return it->second;
        fail_at(path, "unknown bimodule '" + n + "'");
    }
    SpacePtr space_of(const json& j, const std::string& path) const {
        if (!j.is_array() || j.empty()) fail_at(path, "expected a non-empty array of bimodule names");
        std::vector<BimodulePtr> atoms;
        for (std::size_t i = 0; i < j.size(); ++i) {
            std::string p = path + "/" + std::to_string(i);
            if (!j[i].is_string()) fail_at(p, "expected a name");
            atoms.push_back(atom(j[i].get<std::string>(), p));
        }
        for (std::size_t i = 0; i + 1 < atoms.size(); ++i)
            if (atoms[i]->right() != atoms[i + 1]->left())
                fail_at(path, "factors " + std::to_string(i) + " and " + std::to_string(i + 1) + " do not share an algebra");
        return space(atoms);
    }
    ExtPtr ext(const std::string& n, const std::string& path) const {
        auto it = s.extensions.find(n);
        if (it == s.extensions.end()) fail_at(path, "unknown extension '" + n + "'");
        return it->second;
    }
    CoringPtr cor(const std::string& n, const std::string& path) const {
        auto it = s.corings.find(n);
        if (it == s.corings.end()) fail_at(path, "unknown coring '" + n + "'");
        return it->second;
    }
    LinearMap lin(const json& j, const std::string& key, const std::string& path, const SpacePtr& dom,
                  const SpacePtr& cod) const {
        return {dom, cod, matrix_from(field_of(j, key, path), cod->dim(), dom->dim(), f, path + "/" + key)};
    }
};

template <class Fn>
void each(const json& root, const char* key, Fn fn) {
    auto it = root.find(key);
    if (it == root.end()) return;
    std::string path = std::string("/") + key;
    if (!it->is_object()) fail_at(path, "expected an object");
    for (auto e = it->begin(); e != it->end(); ++e) {
        std::string p = path + "/" + e.key();
        try {
            fn(e.key(), e.value(), p);
        } catch (const InputError& ex) {
            if (std::string(ex.what()).rfind("/", 0) == 0) throw;
            fail_at(p, ex.what());
        } catch (const std::exception& ex) {
            fail_at(p, ex.what());
        }
    }
}

std::size_t line_of(const std::string& text, std::size_t byte, std::size_t& col) {
    std::size_t line = 1, start = 0;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line, start = i + 1;
    col = byte - start;
    return line;
}

const char* const kSections[] = {"algebras", "extensions", "bimodules", "corings", "comodules",
                                 "entwinings", "r_objects", "cowreaths", "rt_objects", "wreaths",
                                 "twistings", "skew_polys", "maps"};

}  // namespace

Session parse_session(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t col = 0, line = line_of(text, e.byte ? e.byte - 1 : 0, col);
        throw InputError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
    }
    if (!root.is_object()) fail_at("/", "expected an object");
    std::string fname = string_of(root, "field", "");
    Field f;
    if (fname == "Q") f = Field::rationals();
    else if (fname.size() > 4 && fname.rfind("GF(", 0) == 0 && fname.back() == ')') {
        unsigned long p = 0;
        try {
            p = std::stoul(fname.substr(3, fname.size() - 4));
        } catch (const std::exception&) {
            fail_at("/field", "bad modulus in '" + fname + "'");
        }
        try {
            f = Field::gf(static_cast<std::uint32_t>(p));
        } catch (const InputError& e) {
            fail_at("/field", e.what());
        }
    } else fail_at("/field", "expected \"Q\" or \"GF(p)\"");

    std::set<std::string> names{"k"}, known{"field"};
    for (const char* sec : kSections) {
        known.insert(sec);
        auto it = root.find(sec);
        if (it == root.end() || !it->is_object()) continue;
        for (auto e = it->begin(); e != it->end(); ++e) {
            const std::string& n = e.key();
            if (n.empty() || n.front() == '|' || n.front() == '@' || !names.insert(n).second)
                fail_at(std::string("/") + sec + "/" + n, "name is reserved or already used");
        }
    }
    for (auto it = root.begin(); it != root.end(); ++it)
        if (!known.count(it.key())) fail_at("/" + it.key(), "unknown section");

    Session s(f);
    Reader r{s, f};
    each(root, "algebras", [&](const std::string& n, const json& j, const std::string& p) {
        std::size_t dim = size_of(j, "dim", p);
        if (dim == 0) fail_at(p + "/dim", "dimension must be positive");
        Matrix mult = matrix_from(field_of(j, "mult", p), dim, dim * dim, f, p + "/mult");
        auto unit = vector_from(field_of(j, "unit", p), dim, f, p + "/unit");
        std::vector<std::string> labels;
        if (j.contains("labels")) {
            const json& l = j["labels"];
            if (!l.is_array() || l.size() != dim) fail_at(p + "/labels", "expected " + std::to_string(dim) + " labels");
            for (const auto& x : l) labels.push_back(x.get<std::string>());
        }
        s.algebras[n] = std::make_shared<const FinAlgebra>(f, dim, mult, unit, labels, n);
    });
    each(root, "extensions", [&](const std::string& n, const json& j, const std::string& p) {
        auto base = r.alg(string_of(j, "base", p), p + "/base");
        auto total = r.alg(string_of(j, "total", p), p + "/total");
        Matrix iota = matrix_from(field_of(j, "iota", p), total->dim(), base->dim(), f, p + "/iota");
        s.extensions[n] = ring_extension(base, total, {base, total, iota});
    });
    each(root, "bimodules", [&](const std::string& n, const json& j, const std::string& p) {
        auto left = r.alg(string_of(j, "left", p), p + "/left");
        auto right = r.alg(string_of(j, "right", p), p + "/right");
        std::size_t dim = size_of(j, "dim", p);
        auto actions = [&](const char* key, const AlgebraPtr& a) {
            const json& arr = field_of(j, key, p);
            std::string ap = p + "/" + key;
            if (!arr.is_array() || arr.size() != a->dim())
                fail_at(ap, "expected one matrix per basis element of " + a->name());
            std::vector<Matrix> out;
            for (std::size_t i = 0; i < arr.size(); ++i)
                out.push_back(matrix_from(arr[i], dim, dim, f, ap + "/" + std::to_string(i)));
            return out;
        };
        s.bimodules[n] = std::make_shared<const Bimodule>(left, right, dim, actions("left_action", left),
                                                          actions("right_action", right), n);
    });
    each(root, "corings", [&](const std::string& n, const json& j, const std::string& p) {
        auto base = r.alg(string_of(j, "base", p), p + "/base");
        auto c = r.space_of(field_of(j, "carrier", p), p + "/carrier");
        if (c->left_algebra() != base || c->right_algebra() != base) fail_at(p + "/carrier", "carrier is not over the base");
        s.corings[n] = make_coring(base, c, r.lin(j, "comult", p, c, otimes(c, c)),
                                   r.lin(j, "counit", p, c, base_space(base)), n);
    });
    each(root, "comodules", [&](const std::string& n, const json& j, const std::string& p) {
        std::string side = string_of(j, "side", p);
        if (side != "left" && side != "right") fail_at(p + "/side", "expected \"left\" or \"right\"");
        Comodule m;
        m.side = side == "left" ? Side::left : Side::right;
        m.coring = r.cor(string_of(j, "coring", p), p + "/coring");
        m.carrier = r.space_of(field_of(j, "carrier", p), p + "/carrier");
        auto cod = m.side == Side::right ? otimes(m.carrier, m.coring->carrier) : otimes(m.coring->carrier, m.carrier);
        m.coaction = r.lin(j, "coaction", p, m.carrier, cod);
        m.name = n;
        s.comodules[n] = m;
    });
    each(root, "entwinings", [&](const std::string& n, const json& j, const std::string& p) {
        auto a = r.alg(string_of(j, "algebra", p), p + "/algebra");
        auto c = r.cor(string_of(j, "coalgebra", p), p + "/coalgebra");
        if (c->base != ground_field(f)) fail_at(p + "/coalgebra", "expected a coalgebra over k");
        auto ua = space(underlying(a));
        s.entwinings[n] = {a, c, r.lin(j, "psi", p, otimes(c->carrier, ua), otimes(ua, c->carrier)), n};
    });
    each(root, "r_objects", [&](const std::string& n, const json& j, const std::string& p) {
        auto c = r.cor(string_of(j, "coring", p), p + "/coring");
        auto m = r.space_of(field_of(j, "carrier", p), p + "/carrier");
        s.r_objects[n] = {c, m, r.lin(j, "twist", p, otimes(c->carrier, m), otimes(m, c->carrier)), n};
    });
    each(root, "cowreaths", [&](const std::string& n, const json& j, const std::string& p) {
        std::string on = string_of(j, "object", p);
        auto it = s.r_objects.find(on);
        if (it == s.r_objects.end()) fail_at(p + "/object", "unknown R object '" + on + "'");
        const RObject& o = it->second;
        auto cm = otimes(o.coring->carrier, o.carrier);
        s.cowreaths[n] = {o, r.lin(j, "xi", p, cm, o.coring->carrier),
                          r.lin(j, "delta", p, cm, otimes(cm, o.carrier)), n};
    });
    each(root, "rt_objects", [&](const std::string& n, const json& j, const std::string& p) {
        auto e = r.ext(string_of(j, "extension", p), p + "/extension");
        auto m = r.space_of(field_of(j, "carrier", p), p + "/carrier");
        s.rt_objects[n] = {e, m, r.lin(j, "twist", p, otimes(e->carrier, m), otimes(m, e->carrier)), n};
    });
    each(root, "wreaths", [&](const std::string& n, const json& j, const std::string& p) {
        std::string on = string_of(j, "object", p);
        auto it = s.rt_objects.find(on);
        if (it == s.rt_objects.end()) fail_at(p + "/object", "unknown R object '" + on + "'");
        const RTObject& o = it->second;
        auto rt = otimes(o.carrier, o.ext->carrier);
        s.wreaths[n] = {o, r.lin(j, "eta", p, o.ext->carrier, rt),
                        r.lin(j, "mu", p, otimes(o.carrier, rt), rt), n};
    });
    each(root, "twistings", [&](const std::string& n, const json& j, const std::string& p) {
        auto re = r.ext(string_of(j, "r", p), p + "/r");
        auto te = r.ext(string_of(j, "t", p), p + "/t");
        s.twistings[n] = {re, te, r.lin(j, "twist", p, otimes(te->carrier, re->carrier), otimes(re->carrier, te->carrier))};
    });
    each(root, "skew_polys", [&](const std::string& n, const json& j, const std::string& p) {
        auto b = r.alg(string_of(j, "algebra", p), p + "/algebra");
        Matrix sigma = matrix_from(field_of(j, "sigma", p), b->dim(), b->dim(), f, p + "/sigma");
        Matrix delta = matrix_from(field_of(j, "delta", p), b->dim(), b->dim(), f, p + "/delta");
        s.skew_polys[n] = {b, {b, b, sigma}, delta, n};
    });
    each(root, "maps", [&](const std::string& n, const json& j, const std::string& p) {
        auto dom = r.space_of(field_of(j, "dom", p), p + "/dom");
        auto cod = r.space_of(field_of(j, "cod", p), p + "/cod");
        s.maps[n] = r.lin(j, "matrix", p, dom, cod);
    });
    return s;
}

Session load_session(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_session(ss.str());
}

std::string serialize_session(const Session& s) {
    std::string out;
    pretty(SessionWriter{s}.write(), 0, out);
    return out + "\n";
}

void save_session(const Session& s, const std::string& path) {
    std::string text = serialize_session(s);
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

}  // namespace coringlab
