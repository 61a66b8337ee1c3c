#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lookahead {

// Base for every error raised by the library. Callers that only care about
// "something in the model was violated" can catch this one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyInstance : public Error {
public:
    EmptyInstance() : Error("instance has no jobs") {}
};

class NonPositiveTime : public Error {
public:
    explicit NonPositiveTime(std::size_t job)
        : Error("processing time of job " + std::to_string(job) + " is not positive"), job_(job) {}
    std::size_t job() const noexcept { return job_; }

private:
    std::size_t job_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class InvalidParam : public Error {
public:
    using Error::Error;
};

class CapacityExceeded : public Error {
public:
    using Error::Error;
};

class ZeroOpt : public Error {
public:
    ZeroOpt() : Error("optimal makespan is zero") {}
};

class SchedulerMachineMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace lookahead
