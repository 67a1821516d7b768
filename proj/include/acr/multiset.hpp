#pragma once

#include <map>
#include <stdexcept>

namespace acr {

// Multiset over an ordered element type; multiplicities are kept strictly
// positive (inserting zero copies is a no-op, erasing below zero is an error).
template <typename T>
class Multiset {
  public:
    Multiset() = default;

    void add(const T& x, long long count = 1) {
        if (count < 0) throw std::invalid_argument("negative multiplicity");
        if (count == 0) return;
        elems_[x] += count;
    }

    long long count(const T& x) const {
        auto it = elems_.find(x);
        return it == elems_.end() ? 0 : it->second;
    }

    long long size() const {
        long long s = 0;
        for (auto& [x, m] : elems_) s += m;
        return s;
    }

    bool empty() const { return elems_.empty(); }

    const std::map<T, long long>& entries() const { return elems_; }

    bool operator==(const Multiset&) const = default;

  private:
    std::map<T, long long> elems_;
};

// The c-restriction M|c: every multiplicity capped at c. c = 0 is rejected,
// a 0-restriction would erase the multiset rather than restrict it.
template <typename T>
Multiset<T> c_restrict(const Multiset<T>& m, long long c) {
    if (c < 1) throw std::invalid_argument("c-restriction requires c >= 1");
    Multiset<T> r;
    for (auto& [x, mult] : m.entries()) r.add(x, mult < c ? mult : c);
    return r;
}

}  // namespace acr
