#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace jnt {

/// Non-owning window onto contiguous binary64 storage.
///
/// A view is (base, offset, count): the kernels in this library address
/// subvectors by carrying the whole storage plus the offset where the
/// interesting part starts, instead of strides.  Constructing a view
/// checks that [offset, offset + count) stays inside the storage; after
/// that, element access is unchecked.
class VectorView {
public:
    VectorView() = default;

    /// Whole-storage view.
    VectorView(std::span<double> storage) noexcept
        : base_(storage.data()), storage_size_(storage.size()),
          offset_(0), size_(storage.size()) {}

    VectorView(std::vector<double>& v) noexcept : VectorView(std::span<double>(v)) {}

    /// Window of `count` elements starting `offset` elements into `storage`.
    VectorView(std::span<double> storage, std::size_t offset, std::size_t count)
        : base_(storage.data()), storage_size_(storage.size()),
          offset_(offset), size_(count) {
        if (offset > storage_size_ || count > storage_size_ - offset)
            throw DimensionError("VectorView: window [" + std::to_string(offset) + ", " +
                                 std::to_string(offset + count) + ") escapes storage of size " +
                                 std::to_string(storage_size_));
    }

    VectorView(std::vector<double>& v, std::size_t offset, std::size_t count)
        : VectorView(std::span<double>(v), offset, count) {}

    std::size_t size() const noexcept { return size_; }
    std::size_t offset() const noexcept { return offset_; }
    bool empty() const noexcept { return size_ == 0; }

    /// Pointer to the first visible element.
    double* data() const noexcept { return base_ + offset_; }

    double& operator[](std::size_t i) const noexcept { return base_[offset_ + i]; }

    /// View of `count` elements starting `at` positions into this view.
    VectorView subview(std::size_t at, std::size_t count) const {
        if (at > size_ || count > size_ - at)
            throw DimensionError("VectorView::subview: [" + std::to_string(at) + ", " +
                                 std::to_string(at + count) + ") escapes view of size " +
                                 std::to_string(size_));
        return VectorView(std::span<double>(base_, storage_size_), offset_ + at, count);
    }

    std::span<double> span() const noexcept { return {data(), size_}; }

private:
    double* base_ = nullptr;
    std::size_t storage_size_ = 0;
    std::size_t offset_ = 0;
    std::size_t size_ = 0;
};

} // namespace jnt
