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

/**
 * @file
 * Transposition decomposition of the cyclic shift (1 2 ... m) and its
 * packing into rounds of at most s disjoint transpositions.
 *
 * Sequences are stored in application order: element 0 acts first. A round
 * is a set of pairwise-disjoint transpositions applied simultaneously.
 * Composing every round in order sends the content of register i to
 * register i+1 (and m to 1).
 */

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace umt {

/// Swap of registers (first, second), 1-based, first < second.
struct Transposition {
    int first = 0;
    int second = 0;

    Transposition() = default;
    /// Canonicalizes the order; throws ParameterError if i == j or either is < 1.
    Transposition(int i, int j);

    bool touches(int r) const noexcept { return first == r || second == r; }
    bool overlaps(const Transposition &o) const noexcept {
        return touches(o.first) || touches(o.second);
    }
    friend bool operator==(const Transposition &, const Transposition &) = default;
};

enum class SchedulePolicy { Greedy, LayerRestricted };

std::string to_string(SchedulePolicy policy);
/// Accepts "greedy" and "layer-restricted" (or "layer").
SchedulePolicy parse_schedule_policy(std::string_view text);

/// (i, m+1-i) for i = 1..floor(m/2), then (j, m+2-j) for j = 2..ceil(m/2);
/// m-1 transpositions in application order.
std::vector<Transposition> decompose_cycle(int m);

class TranspositionSchedule {
  public:
    using Round = std::vector<Transposition>;

    TranspositionSchedule(int m, int s, SchedulePolicy policy, std::vector<Round> rounds);

    int copies() const noexcept { return m_; }
    int width() const noexcept { return s_; }
    SchedulePolicy policy() const noexcept { return policy_; }
    const std::vector<Round> &rounds() const noexcept { return rounds_; }

    /// Achieved controlled-SWAP depth: number of rounds.
    int depth() const noexcept { return static_cast<int>(rounds_.size()); }
    int transposition_count() const;

    /// Rounds flattened in application order.
    std::vector<Transposition> flatten() const;

  private:
    int m_;
    int s_;
    SchedulePolicy policy_;
    std::vector<Round> rounds_;
};

/// Packs decompose_cycle(m) into rounds of <= s disjoint transpositions.
///
/// Greedy is list scheduling over the dependency graph (an entry depends on
/// every earlier entry sharing a register): each round takes ready entries
/// by longest remaining dependency chain, then by smallest first index.
/// LayerRestricted never mixes the two blocks of the decomposition.
TranspositionSchedule schedule(int m, int s, SchedulePolicy policy = SchedulePolicy::Greedy);

/// Destination of each register's content after applying the schedule:
/// result[i-1] is where the content of register i ends up (1-based).
std::vector<int> apply_schedule(const TranspositionSchedule &sched);

/// ceil((m-1)/s).
int depth_bound(int m, int s);
/// ceil(floor(m/2)/s) + ceil((ceil(m/2)-1)/s).
int layer_restricted_depth(int m, int s);

/// "round k: (i,j) (i,j) ..." one line per round.
std::string to_text(const TranspositionSchedule &sched);

} // namespace umt
