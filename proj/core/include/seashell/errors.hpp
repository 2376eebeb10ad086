#pragma once

#include <stdexcept>
#include <string>

namespace seashell {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A constructor argument violates a family or grid bound.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// A point lies outside the domain where the requested quantity is defined.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Cones and planes through the origin have no polar equation.
class UnsupportedFamily : public Error {
public:
    using Error::Error;
};

class DegenerateFrame : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

class MeshError : public Error {
public:
    using Error::Error;
};

class EmptyMesh : public MeshError {
public:
    using MeshError::MeshError;
};

class UnsupportedPlane : public Error {
public:
    using Error::Error;
};

}  // namespace seashell
