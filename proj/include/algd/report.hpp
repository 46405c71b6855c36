#pragma once

#include <string>
#include <vector>

namespace algd {

struct Violation {
    std::string axiom;    // tag, e.g. "counit" or "takeuchi"
    std::string witness;  // offending basis tuple
    std::string lhs;
    std::string rhs;
};

class Report {
public:
    bool ok() const { return items_.empty(); }
    const std::vector<Violation>& items() const { return items_; }
    std::size_t size() const { return items_.size(); }

    void add(std::string axiom, std::string witness, std::string lhs = {}, std::string rhs = {}) {
        items_.push_back({std::move(axiom), std::move(witness), std::move(lhs), std::move(rhs)});
    }
    void merge(const Report& other, const std::string& prefix = {}) {
        for (auto v : other.items_) {
            if (!prefix.empty()) v.axiom = prefix + "." + v.axiom;
            items_.push_back(std::move(v));
        }
    }
    bool has(const std::string& axiom) const {
        for (const auto& v : items_)
            if (v.axiom == axiom || v.axiom.find(axiom) != std::string::npos) return true;
        return false;
    }

    std::string text() const {
        if (items_.empty()) return "ok\n";
        std::string s;
        for (const auto& v : items_) {
            s += "FAIL " + v.axiom + " at " + v.witness;
            if (!v.lhs.empty() || !v.rhs.empty()) s += ": " + v.lhs + " != " + v.rhs;
            s += "\n";
        }
        return s;
    }

private:
    std::vector<Violation> items_;
};

}  // namespace algd
