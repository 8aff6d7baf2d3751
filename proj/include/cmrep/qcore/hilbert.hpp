#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cmrep/qcore/matrix.hpp"

namespace cmrep::qcore {

struct Subsystem {
    std::string label;
    std::size_t dim = 2;

    friend bool operator==(const Subsystem&, const Subsystem&) = default;
};

/// Ordered tensor-product structure. The first subsystem is the most
/// significant digit of the flat basis index.
class HilbertSpec {
public:
    HilbertSpec() = default;
    explicit HilbertSpec(std::vector<Subsystem> subsystems);

    /// Every subsystem a qubit.
    static HilbertSpec qubits(const std::vector<std::string>& labels);

    const std::vector<Subsystem>& subsystems() const { return subsystems_; }
    std::size_t size() const { return subsystems_.size(); }
    std::size_t total_dim() const { return total_dim_; }

    /// Position of `label`; throws LabelError if absent.
    std::size_t index_of(const std::string& label) const;
    bool contains(const std::string& label) const;
    std::size_t dim_of(const std::string& label) const { return subsystems_[index_of(label)].dim; }

    /// Kept subsystems in original order.
    HilbertSpec restricted_to(const std::vector<std::string>& keep) const;
    /// Concatenation; labels must stay unique.
    HilbertSpec joined(const HilbertSpec& other) const;

    /// Per-subsystem digits of a flat basis index.
    std::vector<std::size_t> digits(std::size_t flat) const;
    std::size_t flat_index(const std::vector<std::size_t>& digits) const;

    friend bool operator==(const HilbertSpec&, const HilbertSpec&) = default;

private:
    std::vector<Subsystem> subsystems_;
    std::size_t total_dim_ = 1;
};

/// Lift an operator acting on the listed subsystems (in the listed order)
/// to the whole space.
ComplexMatrix embed(const ComplexMatrix& op, const HilbertSpec& space,
                    const std::vector<std::string>& targets);

}  // namespace cmrep::qcore
