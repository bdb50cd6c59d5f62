#include "coringlab/report.hpp"

#include <algorithm>
#include <sstream>

namespace coringlab {

const char* to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::error: return "error";
    }
    return "?";
}

void Report::fail(Witness w) {
    if (status == Status::pass) status = Status::fail;
    witnesses.push_back(std::move(w));
}

void Report::error(const std::string& msg) {
    status = Status::error;
    message = message.empty() ? msg : message + "; " + msg;
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (auto w : other.witnesses) {
        w.equation = prefix + w.equation;
        witnesses.push_back(std::move(w));
    }
    for (const auto& c : other.checked) checked.push_back(prefix + c);
    if (other.status == Status::error) error(other.message);
    else if (other.status == Status::fail && status == Status::pass) status = Status::fail;
}

bool Report::failed(const std::string& equation) const {
    return std::any_of(witnesses.begin(), witnesses.end(), [&](const Witness& w) { return w.equation == equation; });
}

namespace {
std::string vec(const std::vector<Scalar>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s + ")";
}
}  // namespace

std::string Report::text() const {
    std::ostringstream os;
    os << check << (target.empty() ? "" : " " + target) << ": " << to_string(status) << "\n";
    if (!message.empty()) os << "  " << message << "\n";
    for (const auto& w : witnesses) {
        os << "  [" << w.equation << "] basis (";
        for (std::size_t i = 0; i < w.basis.size(); ++i) os << (i ? "," : "") << w.basis[i];
        os << ")";
        if (!w.lhs.empty() || !w.rhs.empty()) os << " lhs=" << vec(w.lhs) << " rhs=" << vec(w.rhs);
        if (!w.note.empty()) os << " " << w.note;
        os << "\n";
    }
    return os.str();
}

}  // namespace coringlab
