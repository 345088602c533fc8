#pragma once

#include <stdexcept>
#include <string>

namespace biasbench {

// Thrown when an undersampling request cannot be satisfied: the requested
// number of retained A=1 rows exceeds the available count, or rounds to zero.
class InfeasibleUndersampling : public std::runtime_error {
public:
    explicit InfeasibleUndersampling(const std::string& what) : std::runtime_error(what) {}
};

// Configuration file problems (unknown key, unparsable value, missing file).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class CsvError : public std::runtime_error {
public:
    explicit CsvError(const std::string& what) : std::runtime_error(what) {}
};

class CsvIoError : public CsvError {
public:
    explicit CsvIoError(const std::string& what) : CsvError(what) {}
};

class CsvHeaderError : public CsvError {
public:
    explicit CsvHeaderError(const std::string& what) : CsvError(what) {}
};

class CsvRaggedRowError : public CsvError {
public:
    explicit CsvRaggedRowError(const std::string& what) : CsvError(what) {}
};

class CsvValueError : public CsvError {
public:
    explicit CsvValueError(const std::string& what) : CsvError(what) {}
};

}  // namespace biasbench
