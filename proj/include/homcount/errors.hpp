#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homcount {

// Base class for everything thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SelfLoopError : public Error {
public:
    explicit SelfLoopError(int v)
        : Error("self-loop at vertex " + std::to_string(v) + "; graphs are simple"), vertex(v) {}
    int vertex;
};

class DuplicateEdgeError : public Error {
public:
    DuplicateEdgeError(int u_, int v_)
        : Error("duplicate edge {" + std::to_string(u_) + "," + std::to_string(v_) + "}"),
          u(u_),
          v(v_) {}
    int u;
    int v;
};

class VertexOutOfRangeError : public Error {
public:
    VertexOutOfRangeError(long long v, int order)
        : Error("vertex " + std::to_string(v) + " out of range for a graph of order " +
                std::to_string(order)),
          vertex(v),
          graph_order(order) {}
    long long vertex;
    int graph_order;
};

// Family constructors reject orders below their minimum (path needs n >= 1, cycle n >= 3).
class InvalidOrderError : public Error {
public:
    using Error::Error;
};

class MappingArityError : public Error {
public:
    MappingArityError(std::size_t got, std::size_t expected)
        : Error("mapping has " + std::to_string(got) + " entries, domain has " +
                std::to_string(expected) + " vertices") {}
};

class ImageOutOfRangeError : public Error {
public:
    ImageOutOfRangeError(int image, int codomain_order)
        : Error("image vertex " + std::to_string(image) + " out of range for codomain order " +
                std::to_string(codomain_order)) {}
};

// The exhaustive counter refuses inputs whose mapping space exceeds its budget.
class BudgetExceededError : public Error {
public:
    BudgetExceededError(const std::string& required, unsigned long long budget)
        : Error("enumeration needs " + required + " mappings, budget is " +
                std::to_string(budget)) {}
};

// t(G,F) is undefined when the codomain is empty but the domain is not: |M| = 0.
class EmptyCodomainError : public Error {
public:
    EmptyCodomainError() : Error("homomorphism density is undefined for an empty codomain") {}
};

// graph6 short form stops at 62 vertices.
class TooLargeError : public Error {
public:
    using Error::Error;
};

}  // namespace homcount
