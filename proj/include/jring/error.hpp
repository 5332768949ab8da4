#pragma once

#include <stdexcept>
#include <string>

namespace jring {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Ring construction / arithmetic.
class TwoNotInvertible : public Error {
public:
    using Error::Error;
};
class InvalidRing : public Error {
public:
    using Error::Error;
};
class RingMismatch : public Error {
public:
    using Error::Error;
};
class UnsupportedRing : public Error {
public:
    using Error::Error;
};
class SkewGeneratorUnavailable : public Error {
public:
    using Error::Error;
};

// Matrix shape / index contracts.
class ShapeMismatch : public Error {
public:
    using Error::Error;
};
class IndexOutOfRange : public Error {
public:
    using Error::Error;
};
class EqualIndices : public Error {
public:
    using Error::Error;
};
class EmptySubset : public Error {
public:
    using Error::Error;
};
class SizeTooSmall : public Error {
public:
    using Error::Error;
};
class NotSkew : public Error {
public:
    using Error::Error;
};
class NotSelfAdjoint : public Error {
public:
    using Error::Error;
};

// Derivation checking.
class MissingValue : public Error {
public:
    using Error::Error;
};

// Function-algebra module.
class PointOutOfRange : public Error {
public:
    using Error::Error;
};
class ZeroWeight : public Error {
public:
    using Error::Error;
};
class NotCornerSupported : public Error {
public:
    using Error::Error;
};

// Oracle contracts.
class InconsistentOracle : public Error {
public:
    using Error::Error;
};
class AnchorMismatch : public Error {
public:
    using Error::Error;
};
class NotJointlyInner : public Error {
public:
    using Error::Error;
};

/// Joint solve failed at one point of the index set.
class PointNotInner : public Error {
public:
    PointNotInner(int point, const std::string& msg) : Error(msg), point_(point) {}
    int point() const { return point_; }

private:
    int point_ = 0;
};

// Serialization.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace jring
