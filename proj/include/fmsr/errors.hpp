#ifndef FMSR_ERRORS_HPP
#define FMSR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fmsr {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// gf256
class ZeroInverse : public Error {
public:
    ZeroInverse() : Error("gf256: inverse of zero") {}
};

// gfmatrix
class Singular : public Error {
public:
    explicit Singular(const std::string& msg = "matrix is singular") : Error(msg) {}
};
class LengthMismatch : public Error {
public:
    explicit LengthMismatch(const std::string& msg) : Error(msg) {}
};

// codec
class ParamsTooLarge : public Error {
public:
    explicit ParamsTooLarge(const std::string& msg) : Error(msg) {}
};
class BadParams : public Error {
public:
    explicit BadParams(const std::string& msg) : Error(msg) {}
};
class EmptyFile : public Error {
public:
    EmptyFile() : Error("cannot encode an empty file") {}
};
class NotDecodable : public Error {
public:
    explicit NotDecodable(const std::string& msg = "chunk collection is not decodable") : Error(msg) {}
};
class WrongCount : public Error {
public:
    explicit WrongCount(const std::string& msg) : Error(msg) {}
};

// repair
class IterationLimitExceeded : public Error {
public:
    explicit IterationLimitExceeded(const std::string& msg) : Error(msg) {}
};
class SampleLimitExceeded : public Error {
public:
    explicit SampleLimitExceeded(const std::string& msg) : Error(msg) {}
};

// store
class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};
class NodeMismatch : public Error {
public:
    explicit NodeMismatch(const std::string& msg) : Error(msg) {}
};
class ChunkMissing : public Error {
public:
    explicit ChunkMissing(const std::string& msg) : Error(msg) {}
};
class AlreadyFailed : public Error {
public:
    explicit AlreadyFailed(const std::string& msg) : Error(msg) {}
};
class FormatError : public Error {
public:
    FormatError(const std::string& msg, int line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    int line() const { return line_; }
private:
    int line_;
};

} // namespace fmsr

#endif
