#include "cmrep/qcore/hilbert.hpp"

#include <algorithm>

#include "cmrep/error.hpp"

namespace cmrep::qcore {

HilbertSpec::HilbertSpec(std::vector<Subsystem> subsystems) : subsystems_(std::move(subsystems)) {
    for (std::size_t i = 0; i < subsystems_.size(); ++i) {
        const auto& s = subsystems_[i];
        if (s.dim < 2) throw RangeError("HilbertSpec: subsystem '" + s.label + "' has dimension < 2");
        for (std::size_t j = 0; j < i; ++j)
            if (subsystems_[j].label == s.label)
                throw LabelError("HilbertSpec: duplicate label '" + s.label + "'");
        total_dim_ *= s.dim;
    }
}

HilbertSpec HilbertSpec::qubits(const std::vector<std::string>& labels) {
    std::vector<Subsystem> subs;
    subs.reserve(labels.size());
    for (const auto& l : labels) subs.push_back({l, 2});
    return HilbertSpec(std::move(subs));
}

std::size_t HilbertSpec::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < subsystems_.size(); ++i)
        if (subsystems_[i].label == label) return i;
    throw LabelError("unknown subsystem label '" + label + "'");
}

bool HilbertSpec::contains(const std::string& label) const {
    return std::any_of(subsystems_.begin(), subsystems_.end(),
                       [&](const Subsystem& s) { return s.label == label; });
}

HilbertSpec HilbertSpec::restricted_to(const std::vector<std::string>& keep) const {
    for (const auto& k : keep) (void)index_of(k);
    std::vector<Subsystem> kept;
    for (const auto& s : subsystems_)
        if (std::find(keep.begin(), keep.end(), s.label) != keep.end()) kept.push_back(s);
    return HilbertSpec(std::move(kept));
}

HilbertSpec HilbertSpec::joined(const HilbertSpec& other) const {
    auto subs = subsystems_;
    subs.insert(subs.end(), other.subsystems_.begin(), other.subsystems_.end());
    return HilbertSpec(std::move(subs));
}

std::vector<std::size_t> HilbertSpec::digits(std::size_t flat) const {
    std::vector<std::size_t> d(subsystems_.size());
    for (std::size_t i = subsystems_.size(); i-- > 0;) {
        d[i] = flat % subsystems_[i].dim;
        flat /= subsystems_[i].dim;
    }
    return d;
}

std::size_t HilbertSpec::flat_index(const std::vector<std::size_t>& digits) const {
    std::size_t flat = 0;
    for (std::size_t i = 0; i < subsystems_.size(); ++i) flat = flat * subsystems_[i].dim + digits[i];
    return flat;
}

ComplexMatrix embed(const ComplexMatrix& op, const HilbertSpec& space,
                    const std::vector<std::string>& targets) {
    std::vector<std::size_t> pos;
    std::size_t sub_dim = 1;
    for (const auto& t : targets) {
        const std::size_t p = space.index_of(t);
        if (std::find(pos.begin(), pos.end(), p) != pos.end())
            throw LabelError("embed: label '" + t + "' listed twice");
        pos.push_back(p);
        sub_dim *= space.subsystems()[p].dim;
    }
    if (op.rows() != sub_dim || op.cols() != sub_dim)
        throw ShapeError("embed: operator dimension does not match target subsystems");

    const std::size_t n = space.total_dim();
    const auto& subs = space.subsystems();
    // Sub-index of the targeted digits, in target order.
    auto local = [&](const std::vector<std::size_t>& d) {
        std::size_t idx = 0;
        for (std::size_t p : pos) idx = idx * subs[p].dim + d[p];
        return idx;
    };

    ComplexMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        const auto dr = space.digits(r);
        for (std::size_t c = 0; c < n; ++c) {
            const auto dc = space.digits(c);
            bool spectators_match = true;
            for (std::size_t i = 0; i < subs.size() && spectators_match; ++i)
                if (std::find(pos.begin(), pos.end(), i) == pos.end() && dr[i] != dc[i])
                    spectators_match = false;
            if (spectators_match) out(r, c) = op(local(dr), local(dc));
        }
    }
    return out;
}

}  // namespace cmrep::qcore
