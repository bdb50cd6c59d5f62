#pragma once

#include "coringlab/cowreath.hpp"
#include "coringlab/ore.hpp"
#include "coringlab/wreath.hpp"

#include <iosfwd>
#include <map>
#include <string>

namespace coringlab {

// twist T (x) R -> R (x) T of two extensions over the ground field
struct TwistData {
    ExtPtr r, t;
    LinearMap twist;
};

// A named object graph. Adding an object also registers everything it refers to,
// under generated names when the referenced object is new.
class Session {
public:
    explicit Session(Field f = {}) : field_(f) {}

    Field field() const { return field_; }

    std::map<std::string, AlgebraPtr> algebras;
    std::map<std::string, BimodulePtr> bimodules;
    std::map<std::string, CoringPtr> corings;
    std::map<std::string, Comodule> comodules;
    std::map<std::string, EntwiningStructure> entwinings;
    std::map<std::string, RObject> r_objects;
    std::map<std::string, Cowreath> cowreaths;
    std::map<std::string, ExtPtr> extensions;
    std::map<std::string, RTObject> rt_objects;
    std::map<std::string, Wreath> wreaths;
    std::map<std::string, TwistData> twistings;
    std::map<std::string, SkewPolyData> skew_polys;
    std::map<std::string, LinearMap> maps;

    std::string add(const std::string& name, const AlgebraPtr& a);
    std::string add(const std::string& name, const BimodulePtr& m);
    std::string add(const std::string& name, const CoringPtr& c);
    std::string add(const std::string& name, const Comodule& m);
    std::string add(const std::string& name, const EntwiningStructure& e);
    std::string add(const std::string& name, const RObject& o);
    std::string add(const std::string& name, const Cowreath& w);
    std::string add(const std::string& name, const ExtPtr& e);
    std::string add(const std::string& name, const RTObject& o);
    std::string add(const std::string& name, const Wreath& w);
    std::string add(const std::string& name, const TwistData& t);
    std::string add(const std::string& name, const SkewPolyData& d);
    std::string add(const std::string& name, const LinearMap& f);

    bool has_name(const std::string& name) const;

private:
    friend struct SessionWriter;
    std::string fresh(const std::string& base) const;
    void add_space(const std::string& owner, const SpacePtr& s);
    std::string atom_name(const BimodulePtr& m) const;
    std::string algebra_name(const AlgebraPtr& a) const;
    std::string extension_name(const ExtPtr& e) const;
    std::string coring_name(const CoringPtr& c) const;

    Field field_;
};

// syntax errors carry line and column; semantic errors carry the JSON path of the field
Session parse_session(const std::string& text);
Session load_session(const std::string& path);
std::string serialize_session(const Session& s);
void save_session(const Session& s, const std::string& path);

}  // namespace coringlab
