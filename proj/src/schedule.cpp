// Copyright 2026 The UMT Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "umt/schedule.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "umt/errors.hpp"

namespace umt {

Transposition::Transposition(int i, int j) : first(std::min(i, j)), second(std::max(i, j)) {
    if (i == j || first < 1) {
        throw ParameterError("invalid transposition (" + std::to_string(i) + "," +
                             std::to_string(j) + ")");
    }
}

std::string to_string(SchedulePolicy policy) {
    return policy == SchedulePolicy::Greedy ? "greedy" : "layer-restricted";
}

SchedulePolicy parse_schedule_policy(std::string_view text) {
    if (text == "greedy") {
        return SchedulePolicy::Greedy;
    }
    if (text == "layer-restricted" || text == "layer") {
        return SchedulePolicy::LayerRestricted;
    }
    throw ParameterError("unknown schedule policy '" + std::string(text) + "'");
}

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

void check_ms(int m, int s) {
    if (m < 2) {
        throw ParameterError("m must be >= 2 (got " + std::to_string(m) + ")");
    }
    if (s < 1 || s > m / 2) {
        throw ParameterError("s must satisfy 1 <= s <= floor(m/2) = " + std::to_string(m / 2) +
                             " (got " + std::to_string(s) + ")");
    }
}

} // namespace

std::vector<Transposition> decompose_cycle(int m) {
    if (m < 2) {
        throw ParameterError("m must be >= 2 (got " + std::to_string(m) + ")");
    }
    std::vector<Transposition> out;
    out.reserve(m - 1);
    for (int i = 1; i <= m / 2; ++i) {
        out.emplace_back(i, m + 1 - i);
    }
    for (int j = 2; j <= (m + 1) / 2; ++j) {
        out.emplace_back(j, m + 2 - j);
    }
    return out;
}

TranspositionSchedule::TranspositionSchedule(int m, int s, SchedulePolicy policy,
                                             std::vector<Round> rounds)
    : m_(m), s_(s), policy_(policy), rounds_(std::move(rounds)) {
    check_ms(m, s);
    for (const auto &round : rounds_) {
        if (round.empty() || static_cast<int>(round.size()) > s) {
            throw ParameterError("schedule round must hold 1..s transpositions");
        }
        for (std::size_t a = 0; a < round.size(); ++a) {
            if (round[a].second > m) {
                throw ParameterError("transposition index exceeds m");
            }
            for (std::size_t b = a + 1; b < round.size(); ++b) {
                if (round[a].overlaps(round[b])) {
                    throw ParameterError("transpositions within a round must be disjoint");
                }
            }
        }
    }
}

int TranspositionSchedule::transposition_count() const {
    int total = 0;
    for (const auto &round : rounds_) {
        total += static_cast<int>(round.size());
    }
    return total;
}

std::vector<Transposition> TranspositionSchedule::flatten() const {
    std::vector<Transposition> out;
    for (const auto &round : rounds_) {
        out.insert(out.end(), round.begin(), round.end());
    }
    return out;
}

namespace {

std::vector<TranspositionSchedule::Round> pack_layer_restricted(int m, int s) {
    const auto seq = decompose_cycle(m);
    const std::size_t first_block = static_cast<std::size_t>(m / 2);
    std::vector<TranspositionSchedule::Round> rounds;
    auto chunk = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; k += s) {
            const std::size_t stop = std::min(end, k + static_cast<std::size_t>(s));
            rounds.emplace_back(seq.begin() + k, seq.begin() + stop);
        }
    };
    chunk(0, first_block);
    chunk(first_block, seq.size());
    return rounds;
}

std::vector<TranspositionSchedule::Round> pack_greedy(int m, int s) {
    const auto seq = decompose_cycle(m);
    const int count = static_cast<int>(seq.size());

    std::vector<std::vector<int>> preds(count);
    std::vector<std::vector<int>> succs(count);
    for (int b = 0; b < count; ++b) {
        for (int a = 0; a < b; ++a) {
            if (seq[a].overlaps(seq[b])) {
                preds[b].push_back(a);
                succs[a].push_back(b);
            }
        }
    }
    // Longest chain from each entry to a sink, counting the entry itself.
    std::vector<int> height(count, 1);
    for (int a = count - 1; a >= 0; --a) {
        for (int b : succs[a]) {
            height[a] = std::max(height[a], height[b] + 1);
        }
    }

    std::vector<bool> done(count, false);
    int remaining = count;
    std::vector<TranspositionSchedule::Round> rounds;
    while (remaining > 0) {
        std::vector<int> ready;
        for (int b = 0; b < count; ++b) {
            if (!done[b] && std::all_of(preds[b].begin(), preds[b].end(),
                                        [&](int a) { return done[a]; })) {
                ready.push_back(b);
            }
        }
        std::sort(ready.begin(), ready.end(), [&](int x, int y) {
            if (height[x] != height[y]) {
                return height[x] > height[y];
            }
            if (seq[x].first != seq[y].first) {
                return seq[x].first < seq[y].first;
            }
            return seq[x].second < seq[y].second;
        });
        TranspositionSchedule::Round round;
        std::vector<int> picked;
        for (int b : ready) {
            if (static_cast<int>(round.size()) == s) {
                break;
            }
            const bool clash = std::any_of(round.begin(), round.end(), [&](const Transposition &t) {
                return t.overlaps(seq[b]);
            });
            if (!clash) {
                round.push_back(seq[b]);
                picked.push_back(b);
            }
        }
        for (int b : picked) {
            done[b] = true;
        }
        remaining -= static_cast<int>(picked.size());
        rounds.push_back(std::move(round));
    }
    return rounds;
}

} // namespace

TranspositionSchedule schedule(int m, int s, SchedulePolicy policy) {
    check_ms(m, s);
    auto rounds = policy == SchedulePolicy::Greedy ? pack_greedy(m, s) : pack_layer_restricted(m, s);
    return TranspositionSchedule(m, s, policy, std::move(rounds));
}

std::vector<int> apply_schedule(const TranspositionSchedule &sched) {
    const int m = sched.copies();
    // slot[r-1] = original register whose content currently sits in register r.
    std::vector<int> slot(m);
    std::iota(slot.begin(), slot.end(), 1);
    for (const auto &round : sched.rounds()) {
        for (const auto &t : round) {
            std::swap(slot[t.first - 1], slot[t.second - 1]);
        }
    }
    std::vector<int> destination(m);
    for (int r = 1; r <= m; ++r) {
        destination[slot[r - 1] - 1] = r;
    }
    return destination;
}

int depth_bound(int m, int s) {
    check_ms(m, s);
    return ceil_div(m - 1, s);
}

int layer_restricted_depth(int m, int s) {
    check_ms(m, s);
    return ceil_div(m / 2, s) + ceil_div((m + 1) / 2 - 1, s);
}

std::string to_text(const TranspositionSchedule &sched) {
    std::ostringstream out;
    out << "# m=" << sched.copies() << " s=" << sched.width()
        << " policy=" << to_string(sched.policy()) << " rounds=" << sched.depth() << "\n";
    for (std::size_t k = 0; k < sched.rounds().size(); ++k) {
        out << "round " << (k + 1) << ":";
        for (const auto &t : sched.rounds()[k]) {
            out << " (" << t.first << "," << t.second << ")";
        }
        out << "\n";
    }
    return out.str();
}

} // namespace umt
