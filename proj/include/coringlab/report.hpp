#pragma once

#include "coringlab/exactla.hpp"

#include <string>
#include <utility>
#include <vector>

namespace coringlab {

struct Witness {
    std::string equation;
    std::vector<std::size_t> basis;   // atomic basis tuple of the failing input
    std::vector<Scalar> lhs, rhs;     // coordinates on the canonical basis of the codomain
    std::string note;
};

enum class Status { pass, fail, error };

struct Report {
    Report() = default;
    Report(std::string c, std::string t) : check(std::move(c)), target(std::move(t)) {}

    std::string check;
    std::string target;
    Status status = Status::pass;
    std::vector<Witness> witnesses;
    std::vector<std::string> checked;   // equation tags that were evaluated
    std::string message;

    bool ok() const { return status == Status::pass; }
    void fail(Witness w);
    void error(const std::string& msg);
    void merge(const Report& other, const std::string& prefix = {});   // prefix renames the merged tags
    bool failed(const std::string& equation) const;
    std::string text() const;
};

const char* to_string(Status s);

}  // namespace coringlab
