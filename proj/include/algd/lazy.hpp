#pragma once

#include <functional>
#include <memory>
#include <mutex>

namespace algd {

// Thread-safe lazily computed value shared between copies of its owner.
template <class T>
class Lazy {
public:
    const T& get(const std::function<T()>& make) const {
        std::call_once(cell_->flag, [&] { cell_->value = std::make_unique<T>(make()); });
        return *cell_->value;
    }

private:
    struct Cell {
        std::once_flag flag;
        std::unique_ptr<T> value;
    };
    std::shared_ptr<Cell> cell_ = std::make_shared<Cell>();
};

}  // namespace algd
