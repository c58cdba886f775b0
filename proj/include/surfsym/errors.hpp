#pragma once

#include <stdexcept>
#include <string>

namespace surfsym {

// Base class for all engine errors. `code()` is a stable machine-readable
// tag; the CLI maps codes to exit statuses.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct DegenerateSurface : Error {
    explicit DegenerateSurface(const std::string& msg)
        : Error("DegenerateSurface", msg) {}
};

struct PlaneInput : Error {
    explicit PlaneInput(const std::string& msg) : Error("PlaneInput", msg) {}
};

struct RetriesExhausted : Error {
    explicit RetriesExhausted(const std::string& msg)
        : Error("RetriesExhausted", msg) {}
};

struct VerificationFailed : Error {
    explicit VerificationFailed(const std::string& msg)
        : Error("VerificationFailed", msg) {}
};

struct CentralNotUnique : Error {
    explicit CentralNotUnique(const std::string& msg)
        : Error("CentralNotUnique", msg) {}
};

struct EliminationDegenerate : Error {
    explicit EliminationDegenerate(const std::string& msg)
        : Error("EliminationDegenerate", msg) {}
};

struct ZeroWidthRequest : Error {
    explicit ZeroWidthRequest(const std::string& msg)
        : Error("ZeroWidthRequest", msg) {}
};

struct ParseError : Error {
    ParseError(const std::string& msg, int line, int col)
        : Error("ParseError", msg + " (line " + std::to_string(line) +
                                  ", column " + std::to_string(col) + ")"),
          line(line), col(col) {}
    int line;
    int col;
};

struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error("InternalError", msg) {}
};

} // namespace surfsym
