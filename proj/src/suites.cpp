#include "fockbench/suites.hpp"

namespace fockbench::detail {

std::vector<std::vector<int>> enumerate_indices(int d, int max_grade) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(d, 0);
    // counts in the last slot are implied by the grade, so recurse over the
    // first d-1 slots for each total grade
    auto rec = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == d - 1) {
            cur[slot] = remaining;
            out.push_back(cur);
            return;
        }
        for (int c = remaining; c >= 0; --c) {
            cur[slot] = c;
            self(self, slot + 1, remaining - c);
        }
    };
    for (int grade = 0; grade <= max_grade; ++grade) rec(rec, 0, grade);
    return out;
}

}  // namespace fockbench::detail
