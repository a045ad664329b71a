#pragma once

#include <stdexcept>
#include <string>

namespace disparity {

// Root of the toolkit's error hierarchy. InputError covers bad data or bad
// requests against the data (CLI exit code 1); ComputeError covers
// operations that cannot produce a result from valid inputs (exit code 2).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InputError : public Error {
public:
    using Error::Error;
};

class ComputeError : public Error {
public:
    using Error::Error;
};

class MalformedRow : public InputError {
public:
    MalformedRow(int line, const std::string& detail)
        : InputError("line " + std::to_string(line) + ": " + detail), line(line) {}
    int line;
};

class DuplicateKey : public InputError {
public:
    DuplicateKey(std::string region, int year)
        : InputError("duplicate observation for (" + region + ", " + std::to_string(year) + ")"),
          region(std::move(region)),
          year(year) {}
    std::string region;
    int year;
};

class NonPositiveValue : public InputError {
public:
    NonPositiveValue(std::string field, std::string region, int year)
        : InputError(field + " must be positive for (" + region + ", " + std::to_string(year) + ")"),
          field(std::move(field)),
          region(std::move(region)),
          year(year) {}
    std::string field;
    std::string region;
    int year;
};

class InconsistentSupraRegion : public InputError {
public:
    explicit InconsistentSupraRegion(std::string region)
        : InputError("region " + region + " is assigned to more than one supra-region"),
          region(std::move(region)) {}
    std::string region;
};

class UnknownRegion : public InputError {
public:
    explicit UnknownRegion(std::string name)
        : InputError("unknown region name: " + name), name(std::move(name)) {}
    std::string name;
};

class InvalidGrowthIndex : public InputError {
public:
    InvalidGrowthIndex(std::string region, int year, const std::string& detail)
        : InputError("growth_index for (" + region + ", " + std::to_string(year) + "): " + detail),
          region(std::move(region)),
          year(year) {}
    std::string region;
    int year;
};

class MissingIndex : public InputError {
public:
    MissingIndex(std::string region, int year)
        : InputError("missing growth_index for (" + region + ", " + std::to_string(year) + ")"),
          region(std::move(region)),
          year(year) {}
    std::string region;
    int year;
};

class BaseYearOutOfRange : public InputError {
public:
    BaseYearOutOfRange(int base_year, int min_year, int max_year)
        : InputError("base year " + std::to_string(base_year) + " outside panel range [" +
                     std::to_string(min_year) + ", " + std::to_string(max_year) + "]"),
          base_year(base_year) {}
    int base_year;
};

class AlreadyDeflated : public InputError {
public:
    AlreadyDeflated() : InputError("panel is already expressed in constant prices") {}
};

class EmptyYear : public InputError {
public:
    explicit EmptyYear(int year)
        : InputError("no observations for year " + std::to_string(year)), year(year) {}
    int year;
};

class NoCommonYears : public ComputeError {
public:
    NoCommonYears() : ComputeError("ratio operands share no common year") {}
};

class TooFewRegions : public ComputeError {
public:
    explicit TooFewRegions(std::size_t count)
        : ComputeError("need at least 2 regions, got " + std::to_string(count)), count(count) {}
    std::size_t count;
};

class DegenerateFit : public ComputeError {
public:
    DegenerateFit() : ComputeError("no informative Lorenz point with population share below 1") {}
};

class ZeroPopulationShare : public ComputeError {
public:
    explicit ZeroPopulationShare(std::size_t index)
        : ComputeError("zero population share with positive GDP share at position " +
                       std::to_string(index)),
          index(index) {}
    std::size_t index;
};

class EmptyGroup : public ComputeError {
public:
    explicit EmptyGroup(std::string group)
        : ComputeError("group " + group + " has no members in this slice"), group(std::move(group)) {}
    std::string group;
};

class TauOutOfRange : public ComputeError {
public:
    TauOutOfRange(int tau, std::size_t length)
        : ComputeError("window length " + std::to_string(tau) + " outside [2, " +
                       std::to_string(length) + "]"),
          tau(tau) {}
    int tau;
};

class ZeroVariance : public ComputeError {
public:
    explicit ZeroVariance(int tau)
        : ComputeError("constant prefix: S(tau) = 0 for tau = " + std::to_string(tau)), tau(tau) {}
    int tau;
};

class InsufficientWindows : public ComputeError {
public:
    explicit InsufficientWindows(std::size_t usable)
        : ComputeError("only " + std::to_string(usable) +
                       " usable R/S windows; at least 3 are required"),
          usable(usable) {}
    std::size_t usable;
};

class PeriodOutsideSeries : public ComputeError {
public:
    PeriodOutsideSeries(int start_year, int end_year)
        : ComputeError("period " + std::to_string(start_year) + "-" + std::to_string(end_year) +
                       " does not overlap the series") {}
};

class EmbeddingFailure : public ComputeError {
public:
    explicit EmbeddingFailure(const std::string& detail)
        : ComputeError("exact fGn simulation degenerated: " + detail +
                       "; retry with a shorter length or a Hurst value farther from the bounds") {}
};

}  // namespace disparity
