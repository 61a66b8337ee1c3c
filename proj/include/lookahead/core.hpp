#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lookahead/errors.hpp"
#include "lookahead/rational.hpp"

namespace lookahead {

struct Job {
    std::size_t index;  // 1-based position in the sequence
    Rational processing_time;
};

/// An ordered, non-empty job sequence with strictly positive processing
/// times. Only constructible through make_instance, so every Instance in
/// the program is valid.
class Instance {
public:
    std::size_t size() const noexcept { return times_.size(); }

    /// Processing time of job i (1-based).
    const Rational& time(std::size_t i) const { return times_.at(i - 1); }
    std::span<const Rational> times() const noexcept { return times_; }
    Job job(std::size_t i) const { return Job{i, time(i)}; }

    Rational total() const;
    Rational max_time() const;

    /// Values joined by single spaces, e.g. "1 1 2".
    std::string to_string() const;

    friend bool operator==(const Instance&, const Instance&) = default;
    // Lexicographic on the value sequence; a proper prefix orders first.
    friend bool operator<(const Instance& a, const Instance& b);

private:
    explicit Instance(std::vector<Rational> times) : times_(std::move(times)) {}
    friend Instance make_instance(std::span<const Rational>);

    std::vector<Rational> times_;
};

Instance make_instance(std::span<const Rational> processing_times);
inline Instance make_instance(std::initializer_list<Rational> processing_times) {
    return make_instance(std::span<const Rational>(processing_times.begin(), processing_times.size()));
}

/// One processing time per non-blank line ("3" or "7/2"); lines whose first
/// non-space character is '#' are comments.
Instance parse_instance_text(std::string_view text);

/// Comma separated values, e.g. "1,2,7/2". Used by the CLI --values flag.
std::vector<Rational> parse_value_list(std::string_view text);

/// What the scheduler is allowed to see when job i arrives: p_i and the
/// next k processing times, truncated at the end of the sequence.
struct LookaheadWindow {
    Rational current;
    std::vector<Rational> future;

    friend bool operator==(const LookaheadWindow&, const LookaheadWindow&) = default;
};

/// k = 0 yields an empty future (pure online arrival).
LookaheadWindow lookahead_window(const Instance& instance, std::size_t i, std::size_t k);

/// Job to machine assignment together with the derived loads. Machines are
/// numbered 1..m.
class Schedule {
public:
    /// assignment[i - 1] is the machine of job i. Throws InvalidParam when
    /// sizes disagree or a machine index is outside 1..m.
    static Schedule from_assignment(const Instance& instance, std::vector<int> assignment,
                                    int machine_count);

    int machine_count() const noexcept { return static_cast<int>(loads_.size()); }
    int machine_of(std::size_t job) const { return assignment_.at(job - 1); }
    const std::vector<int>& assignment() const noexcept { return assignment_; }
    const std::vector<Rational>& loads() const noexcept { return loads_; }
    const Rational& load(int machine) const { return loads_.at(static_cast<std::size_t>(machine - 1)); }
    const Rational& makespan() const noexcept { return makespan_; }

private:
    Schedule() = default;

    std::vector<int> assignment_;
    std::vector<Rational> loads_;
    Rational makespan_;
};

}  // namespace lookahead
