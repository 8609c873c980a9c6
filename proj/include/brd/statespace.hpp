#pragma once

#include <cstdint>
#include <vector>

#include "brd/errors.hpp"
#include "brd/population.hpp"

namespace brd {

// Mixed-radix bijection between states and [0, size). Digits follow the
// canonical state order (x_1..x_b, x'_b'..x'_1) with x'_1 least significant,
// so numeric id order equals canonical lexicographic order.
class StateCodec {
public:
    static StateCodec build(const PopulationSpec& spec, std::uint64_t cap) {
        StateCodec c;
        c.b_ = spec.num_anti_types();
        c.bc_ = spec.num_coor_types();
        std::vector<std::uint64_t> radices;
        for (int i = 1; i <= c.b_; ++i) radices.push_back((std::uint64_t)spec.anti_count(i) + 1);
        for (int j = c.bc_; j >= 1; --j) radices.push_back((std::uint64_t)spec.coor_count(j) + 1);
        c.size_ = 1;
        for (std::uint64_t r : radices) {
            if (c.size_ > cap / r + 1) throw CapExceeded("state space exceeds cap");
            c.size_ *= r;
            if (c.size_ > cap) throw CapExceeded("state space exceeds cap");
        }
        c.strides_.assign(radices.size(), 1);
        for (int k = (int)radices.size() - 2; k >= 0; --k)
            c.strides_[k] = c.strides_[k + 1] * radices[k + 1];
        c.radices_ = std::move(radices);
        return c;
    }

    std::uint64_t size() const { return size_; }
    const std::vector<std::uint64_t>& radices() const { return radices_; }

    // Stride of an anticoordinating (1-based i) or coordinating type digit.
    std::uint64_t anti_stride(int i) const { return strides_[i - 1]; }
    std::uint64_t coor_stride(int j) const { return strides_[b_ + (bc_ - j)]; }

    std::uint64_t encode(const State& x) const {
        std::uint64_t id = 0;
        for (int i = 0; i < b_; ++i) id += (std::uint64_t)x.anti[i] * strides_[i];
        for (int j = 0; j < bc_; ++j)
            id += (std::uint64_t)x.coor[j] * strides_[b_ + (bc_ - 1 - j)];
        return id;
    }

    State decode(std::uint64_t id) const {
        State x;
        x.anti.resize(b_);
        x.coor.resize(bc_);
        for (std::size_t k = 0; k < radices_.size(); ++k) {
            const std::uint64_t digit = id / strides_[k];
            id -= digit * strides_[k];
            if ((int)k < b_)
                x.anti[k] = (int)digit;
            else
                x.coor[bc_ - 1 - ((int)k - b_)] = (int)digit;
        }
        return x;
    }

private:
    int b_ = 0, bc_ = 0;
    std::uint64_t size_ = 0;
    std::vector<std::uint64_t> radices_;
    std::vector<std::uint64_t> strides_;
};

}  // namespace brd
