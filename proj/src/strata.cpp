/*
 * Copyright 2026 The llsdim authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "llsdim/strata.hpp"

#include <algorithm>

namespace llsdim {

std::int64_t binom2(std::int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

Ladder Ladder::from_gaps(const std::vector<std::int64_t>& gaps) {
    Ladder lad;
    lad.degrees.assign(gaps.size() + 1, 0);
    for (size_t i = 0; i < gaps.size(); ++i)
        lad.degrees[i + 1] = lad.degrees[i] + gaps[i];
    return lad;
}

Ladder Ladder::complement() const {
    std::vector<std::int64_t> gaps;
    for (std::int64_t j = b(); j >= 0; --j) gaps.push_back(gap(j));
    return from_gaps(gaps);
}

std::int64_t Ladder::critical_index_of(std::int64_t value) const {
    for (std::int64_t j = 0; j <= b(); ++j)
        if (critical(j) && degrees[j] == value) return j;
    return -1;
}

MultivanishingSequence MultivanishingSequence::over(
    const Ladder& lad, std::vector<std::int64_t> values) {
    MultivanishingSequence s;
    s.a = std::move(values);
    s.r_mult.assign(lad.b() + 1, 0);
    for (std::int64_t v : s.a) {
        std::int64_t j = lad.critical_index_of(v);
        if (j < 0)
            fail_input("ParseError",
                       "value " + std::to_string(v) + " is not a critical degree");
        s.r_mult[j] += 1;
    }
    for (std::int64_t j = 0; j <= lad.b(); ++j)
        if (s.r_mult[j] > lad.gap(j))
            fail_input("ParseError", "repetition bound exceeded at index " +
                                         std::to_string(j));
    return s;
}

std::vector<MultivanishingSequence> enumerate_sequences(const Ladder& lad,
                                                        std::int64_t r,
                                                        std::int64_t d_cap,
                                                        std::int64_t budget) {
    if (r < 0) fail_input("ParseError", "rank must be nonnegative");
    struct Slot {
        std::int64_t j, value, cap;
    };
    std::vector<Slot> slots;
    for (std::int64_t j = 0; j <= lad.b(); ++j)
        if (lad.critical(j) && lad.degrees[j] <= d_cap)
            slots.push_back({j, lad.degrees[j], lad.gap(j)});

    std::vector<MultivanishingSequence> out;
    std::vector<std::int64_t> counts(slots.size(), 0);
    // Nondecreasing length-(r+1) words over the slot values, each slot used
    // at most its gap: choose how many entries each slot contributes.
    std::vector<std::int64_t> chosen;
    auto emit = [&]() {
        if ((std::int64_t)out.size() >= budget)
            fail_input("EnumerationBudgetExceeded",
                       "more than " + std::to_string(budget) +
                           " multivanishing sequences on one side");
        MultivanishingSequence s;
        s.a = chosen;
        s.r_mult.assign(lad.b() + 1, 0);
        for (size_t i = 0; i < slots.size(); ++i) s.r_mult[slots[i].j] = counts[i];
        out.push_back(std::move(s));
    };
    auto rec = [&](auto&& self, size_t slot, std::int64_t remaining) -> void {
        if (remaining == 0) {
            emit();
            return;
        }
        if (slot >= slots.size()) return;
        std::int64_t take_max = std::min<std::int64_t>(slots[slot].cap, remaining);
        // Larger take of the smaller value comes first in lexicographic order.
        for (std::int64_t take = take_max; take >= 0; --take) {
            counts[slot] = take;
            chosen.insert(chosen.end(), take, slots[slot].value);
            self(self, slot + 1, remaining - take);
            chosen.resize(chosen.size() - take);
            counts[slot] = 0;
        }
    };
    rec(rec, 0, r + 1);
    return out;
}

std::int64_t schubert_codim(const MultivanishingSequence& a) {
    std::int64_t total = 0;
    for (size_t l = 0; l < a.a.size(); ++l) total += a.a[l] - (std::int64_t)l;
    for (std::int64_t m : a.r_mult) total += binom2(m);
    return total;
}

Compatibility check_compatible(const Ladder& lad1, const Ladder& lad2,
                               const MultivanishingSequence& a1,
                               const MultivanishingSequence& a2) {
    Compatibility res;
    std::int64_t r = (std::int64_t)a1.a.size() - 1;
    if ((std::int64_t)a2.a.size() - 1 != r) return res;
    if (lad1.b() != lad2.b()) return res;
    std::int64_t b = lad1.b();
    bool all_equal = true;
    for (std::int64_t l = 0; l <= r; ++l) {
        std::int64_t j = lad1.critical_index_of(a1.a[l]);
        if (j < 0) return res;
        std::int64_t need = lad2.degrees[b - j];
        if (a2.a[r - l] < need) return res;
        if (a2.a[r - l] != need) all_equal = false;
    }
    for (std::int64_t l = 0; l <= r; ++l) {
        std::int64_t j = lad2.critical_index_of(a2.a[l]);
        if (j < 0) return res;
        if (a1.a[r - l] < lad1.degrees[b - j]) return res;
    }
    res.valid = true;
    res.refined = all_equal;
    return res;
}

std::vector<EdgeStratum> edge_strata(const Ladder& lad1, const Ladder& lad2,
                                     std::int64_t r, std::int64_t d_cap1,
                                     std::int64_t d_cap2, std::int64_t budget) {
    auto side1 = enumerate_sequences(lad1, r, d_cap1, budget);
    auto side2 = enumerate_sequences(lad2, r, d_cap2, budget);
    std::vector<EdgeStratum> out;
    for (const auto& a1 : side1) {
        for (const auto& a2 : side2) {
            Compatibility c = check_compatible(lad1, lad2, a1, a2);
            if (!c.valid) continue;
            if ((std::int64_t)out.size() >= budget)
                fail_input("EnumerationBudgetExceeded",
                           "more than " + std::to_string(budget) +
                               " strata on one collapsed edge");
            out.push_back({a1, a2, c.refined});
        }
    }
    return out;
}

}  // namespace llsdim
