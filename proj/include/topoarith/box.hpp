#pragma once

#include <memory>
#include <type_traits>

namespace topoarith {

/// Immutable heap cell with value semantics, for recursive variants.
/// Copies share the cell; equality compares the pointees.
template <class T>
class Box {
public:
    Box(T value) : p_(std::make_shared<const T>(std::move(value))) {}  // NOLINT(google-explicit-constructor)
    template <class U, class = std::enable_if_t<!std::is_same_v<std::decay_t<U>, Box> &&
                                                !std::is_same_v<std::decay_t<U>, T>>>
    Box(U&& value) : p_(std::make_shared<const T>(T(std::forward<U>(value)))) {}  // NOLINT(google-explicit-constructor)

    const T& operator*() const noexcept { return *p_; }
    const T* operator->() const noexcept { return p_.get(); }

    friend bool operator==(const Box& a, const Box& b) { return a.p_ == b.p_ || *a.p_ == *b.p_; }

private:
    std::shared_ptr<const T> p_;
};

}  // namespace topoarith
