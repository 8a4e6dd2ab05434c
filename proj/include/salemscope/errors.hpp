// Error types shared across the salemscope library.
#pragma once

#include <stdexcept>
#include <string>

namespace salemscope {

// Base class for all salemscope domain errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input polynomial is not monic where a monic one is required.
struct NonMonicError : Error {
    explicit NonMonicError(const std::string& what = "polynomial must be monic") : Error(what) {}
};

// Input polynomial is not self-reciprocal where reciprocity is required.
struct NotReciprocalError : Error {
    explicit NotReciprocalError(const std::string& what = "polynomial must be self-reciprocal")
        : Error(what) {}
};

// Operation requires an even-degree polynomial.
struct OddDegreeError : Error {
    explicit OddDegreeError(const std::string& what = "polynomial must have even degree")
        : Error(what) {}
};

// Operation requires a squarefree polynomial.
struct NotSquarefreeError : Error {
    explicit NotSquarefreeError(const std::string& what = "polynomial must be squarefree")
        : Error(what) {}
};

// Degree too small for the requested operation.
struct DegreeTooSmallError : Error {
    explicit DegreeTooSmallError(const std::string& what = "polynomial degree is too small")
        : Error(what) {}
};

// Index l out of range for the unimodular-root inequality.
struct BadLError : Error {
    explicit BadLError(const std::string& what = "l must satisfy 0 <= l < d/2") : Error(what) {}
};

// A division that must be exact was not; indicates an internal bug.
struct InternalInexactDivisionError : Error {
    explicit InternalInexactDivisionError(const std::string& what =
                                              "internal error: inexact division in exact path")
        : Error(what) {}
};

// Quadrature tolerance below the supported floor.
struct ToleranceTooTightError : Error {
    explicit ToleranceTooTightError(const std::string& what =
                                        "absolute tolerance below 1e-10 is not supported")
        : Error(what) {}
};

// Unsupported degree for the probability estimators.
struct BadDegreeError : Error {
    explicit BadDegreeError(const std::string& what = "degree must be one of 4, 6, 8, 10, 12")
        : Error(what) {}
};

// Grid resolution too coarse to be meaningful.
struct GridTooCoarseError : Error {
    explicit GridTooCoarseError(const std::string& what = "grid requires m >= 100") : Error(what) {}
};

}  // namespace salemscope
