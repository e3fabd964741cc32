#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace textclf {

enum class TaskKind : std::uint8_t { PosNeg = 0, FiveStar = 1 };

std::string to_string(TaskKind task);
TaskKind task_from_string(const std::string& s);

// Class label for either task. PosNeg stores 0 (negative) / 1 (positive),
// FiveStar stores the star rating 1..5. Ordering by value gives the
// canonical class order: negative < positive, stars ascending.
struct Label {
    TaskKind task;
    std::int8_t value;

    friend bool operator==(const Label&, const Label&) = default;
    friend auto operator<=>(const Label& a, const Label& b) {
        return a.value <=> b.value;
    }
};

inline Label positive_label() { return {TaskKind::PosNeg, 1}; }
inline Label negative_label() { return {TaskKind::PosNeg, 0}; }
inline Label star_label(int stars) {
    return {TaskKind::FiveStar, static_cast<std::int8_t>(stars)};
}

std::string to_string(const Label& label);

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class IoError : public Error {
  public:
    using Error::Error;
};

class RangeError : public Error {
  public:
    using Error::Error;
};

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

// Input that cannot be fitted: a single class, an empty vocabulary, ...
class DegenerateInput : public Error {
  public:
    using Error::Error;
};

class EmptyCorpus : public Error {
  public:
    using Error::Error;
};

class UsageError : public Error {
  public:
    using Error::Error;
};

class FormatError : public Error {
  public:
    enum class Kind { BadMagic, VersionMismatch, CorruptSection };

    FormatError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

  private:
    Kind kind_;
};

}  // namespace textclf
