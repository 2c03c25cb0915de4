#ifndef CATNET_CORE_ERROR_HPP
#define CATNET_CORE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace catnet {

// Base for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public Error {
public:
    using Error::Error;
};

// Input file / report format problems (bad magic, version mismatch, bad CSV...).
class FormatError : public Error {
public:
    using Error::Error;
};

class FieldCountError : public Error {
public:
    FieldCountError(std::size_t line_no, std::size_t fields, std::size_t expected)
        : Error("line " + std::to_string(line_no) + ": got " + std::to_string(fields) +
                " fields, expected " + std::to_string(expected) + " (or +1 with label)"),
          line_no(line_no), fields(fields) {}
    std::size_t line_no;
    std::size_t fields;
};

class FieldTypeError : public Error {
public:
    FieldTypeError(std::size_t line_no, int field_index, const std::string& text)
        : Error("line " + std::to_string(line_no) + ", field " + std::to_string(field_index) +
                ": not a finite number: '" + text + "'"),
          line_no(line_no), field_index(field_index) {}
    std::size_t line_no;
    int field_index;
};

class UnknownLabelError : public Error {
public:
    explicit UnknownLabelError(const std::string& label)
        : Error("unknown label '" + label + "' (register it in the category map)"), label(label) {}
    std::string label;
};

class InsufficientRecordsError : public Error {
public:
    InsufficientRecordsError(const std::string& category, std::size_t requested, std::size_t available)
        : Error("category " + category + ": requested " + std::to_string(requested) +
                " records, only " + std::to_string(available) + " available"),
          category(category), requested(requested), available(available) {}
    std::string category;
    std::size_t requested;
    std::size_t available;
};

class InvalidDataError : public Error {
public:
    using Error::Error;
};

class SchemaMismatchError : public Error {
public:
    using Error::Error;
};

class InvalidSpecError : public Error {
public:
    using Error::Error;
};

class SingleClassError : public Error {
public:
    using Error::Error;
};

class LengthMismatchError : public Error {
public:
    using Error::Error;
};

class EmptyError : public Error {
public:
    using Error::Error;
};

class UndefinedRateError : public Error {
public:
    using Error::Error;
};

class NoQualifiedClassifierError : public Error {
public:
    NoQualifiedClassifierError(const std::string& category, const std::string& bounds)
        : Error("no qualified classifier for " + category + " under policy (" + bounds + ")"),
          category(category) {}
    std::string category;
};

} // namespace catnet

#endif
