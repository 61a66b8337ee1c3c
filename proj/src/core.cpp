#include "lookahead/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace lookahead {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

Rational Instance::total() const {
    Rational sum;
    for (const auto& p : times_) sum += p;
    return sum;
}

Rational Instance::max_time() const { return *std::max_element(times_.begin(), times_.end()); }

std::string Instance::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < times_.size(); ++i) {
        if (i) out += ' ';
        out += times_[i].to_string();
    }
    return out;
}

bool operator<(const Instance& a, const Instance& b) {
    return std::lexicographical_compare(a.times_.begin(), a.times_.end(), b.times_.begin(),
                                        b.times_.end());
}

Instance make_instance(std::span<const Rational> processing_times) {
    if (processing_times.empty()) throw EmptyInstance();
    for (std::size_t i = 0; i < processing_times.size(); ++i)
        if (processing_times[i].sign() <= 0) throw NonPositiveTime(i + 1);
    return Instance(std::vector<Rational>(processing_times.begin(), processing_times.end()));
}

Instance parse_instance_text(std::string_view text) {
    std::vector<Rational> values;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        const auto raw = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;

        const auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        try {
            values.push_back(Rational::parse(line));
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, "malformed processing time '" + std::string(line) + "' (" +
                                          e.what() + ")");
        }
    }
    return make_instance(values);
}

std::vector<Rational> parse_value_list(std::string_view text) {
    std::vector<Rational> values;
    std::size_t field = 0;
    while (true) {
        const auto comma = text.find(',');
        const auto token = trim(text.substr(0, comma));
        ++field;
        try {
            values.push_back(Rational::parse(token));
        } catch (const std::invalid_argument& e) {
            throw InvalidParam("value " + std::to_string(field) + " '" + std::string(token) +
                               "' is not a rational (" + e.what() + ")");
        }
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return values;
}

LookaheadWindow lookahead_window(const Instance& instance, std::size_t i, std::size_t k) {
    const std::size_t n = instance.size();
    if (i < 1 || i > n)
        throw IndexOutOfRange("job index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    LookaheadWindow window{instance.time(i), {}};
    const std::size_t last = std::min(n, i + k);
    for (std::size_t j = i + 1; j <= last; ++j) window.future.push_back(instance.time(j));
    return window;
}

Schedule Schedule::from_assignment(const Instance& instance, std::vector<int> assignment,
                                   int machine_count) {
    if (machine_count < 1) throw InvalidParam("machine count must be positive");
    if (assignment.size() != instance.size())
        throw InvalidParam("assignment covers " + std::to_string(assignment.size()) + " jobs, instance has " +
                           std::to_string(instance.size()));
    Schedule s;
    s.loads_.assign(static_cast<std::size_t>(machine_count), Rational{});
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        const int machine = assignment[i];
        if (machine < 1 || machine > machine_count)
            throw InvalidParam("job " + std::to_string(i + 1) + " assigned to machine " +
                               std::to_string(machine));
        s.loads_[static_cast<std::size_t>(machine - 1)] += instance.times()[i];
    }
    s.assignment_ = std::move(assignment);
    s.makespan_ = *std::max_element(s.loads_.begin(), s.loads_.end());
    return s;
}

}  // namespace lookahead
