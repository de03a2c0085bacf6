#pragma once

// Minimal DIMACS parser and DPLL solver, used only as an independent
// oracle for the CNF export tests. Deliberately unrelated to the library
// search path: plain clause propagation over integer literals.

#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace testdpll {

struct CnfInstance {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
};

inline CnfInstance parse_dimacs(const std::string& text) {
    CnfInstance inst;
    std::istringstream in(text);
    std::string line;
    std::size_t expected_clauses = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        if (line[0] == 'p') {
            std::istringstream hs(line);
            std::string p, cnf;
            hs >> p >> cnf >> inst.num_vars >> expected_clauses;
            continue;
        }
        std::istringstream ls(line);
        std::vector<int> clause;
        int lit;
        while (ls >> lit && lit != 0) clause.push_back(lit);
        inst.clauses.push_back(clause);
    }
    if (inst.clauses.size() != expected_clauses) std::abort(); // header must be exact
    return inst;
}

class Dpll {
public:
    explicit Dpll(const CnfInstance& inst)
        : clauses_(inst.clauses), assign_(static_cast<std::size_t>(inst.num_vars) + 1, 0) {}

    std::optional<std::vector<int>> solve() {
        if (!search()) return std::nullopt;
        std::vector<int> model;
        for (std::size_t v = 1; v < assign_.size(); ++v)
            model.push_back(assign_[v] >= 0 ? static_cast<int>(v) : -static_cast<int>(v));
        return model;
    }

private:
    // 0 unassigned, +1 true, -1 false
    std::vector<std::vector<int>> clauses_;
    std::vector<int> assign_;

    int value(int lit) const {
        int v = assign_[static_cast<std::size_t>(std::abs(lit))];
        if (v == 0) return 0;
        return (lit > 0) == (v > 0) ? 1 : -1;
    }

    // returns false on conflict; appends assigned vars to trail
    bool propagate(std::vector<int>& trail) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& clause : clauses_) {
                int unassigned = 0, last = 0;
                bool satisfied = false;
                for (int lit : clause) {
                    int v = value(lit);
                    if (v == 1) {
                        satisfied = true;
                        break;
                    }
                    if (v == 0) {
                        ++unassigned;
                        last = lit;
                    }
                }
                if (satisfied) continue;
                if (unassigned == 0) return false;
                if (unassigned == 1) {
                    assign_[static_cast<std::size_t>(std::abs(last))] = last > 0 ? 1 : -1;
                    trail.push_back(std::abs(last));
                    changed = true;
                }
            }
        }
        return true;
    }

    bool search() {
        std::vector<int> trail;
        if (!propagate(trail)) {
            for (int v : trail) assign_[static_cast<std::size_t>(v)] = 0;
            return false;
        }
        int branch = 0;
        for (std::size_t v = 1; v < assign_.size(); ++v)
            if (assign_[v] == 0) {
                branch = static_cast<int>(v);
                break;
            }
        if (branch == 0) return true;
        for (int sign : {1, -1}) {
            assign_[static_cast<std::size_t>(branch)] = sign;
            if (search()) return true;
            assign_[static_cast<std::size_t>(branch)] = 0;
        }
        for (int v : trail) assign_[static_cast<std::size_t>(v)] = 0;
        return false;
    }
};

inline bool dimacs_satisfiable(const std::string& text) {
    CnfInstance inst = parse_dimacs(text);
    return Dpll(inst).solve().has_value();
}

} // namespace testdpll
