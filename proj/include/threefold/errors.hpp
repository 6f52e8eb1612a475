#pragma once

#include <stdexcept>
#include <string>

namespace threefold {

// Root of every error thrown by the library. Subclasses only name the
// failure category; the message carries the detail.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ShapeError : public Error { public: using Error::Error; };
class DivisionByZero : public Error { public: using Error::Error; };
class RankDeficient : public Error { public: using Error::Error; };
class PreconditionError : public Error { public: using Error::Error; };
class DegenerateForm : public Error { public: using Error::Error; };
class InternalInconsistency : public Error { public: using Error::Error; };
class Unsupported : public Error { public: using Error::Error; };
class ValidationError : public Error { public: using Error::Error; };

}  // namespace threefold
