#include "mdpforge/env/schema.hpp"

#include <stdexcept>

#include "mdpforge/rng.hpp"

namespace mdpforge::env {

StateSchema::StateSchema(std::vector<FieldInfo> fields, Shape action_shape)
    : fields_(std::move(fields)), action_shape_(action_shape) {
    int offset = 0;
    std::uint64_t fp = hash_label("schema");
    for (auto& f : fields_) {
        for (const auto& other : fields_) {
            if (&other != &f && other.name == f.name) {
                throw std::invalid_argument("duplicate schema field: " + f.name);
            }
        }
        f.offset = offset;
        offset += f.shape.size();
        fp = mix64(fp ^ hash_label(f.name));
        fp = mix64(fp ^ static_cast<std::uint64_t>(f.shape.size()));
        fp = mix64(fp ^ (f.shape.is_vector() ? 2u : 1u));
    }
    fp = mix64(fp ^ static_cast<std::uint64_t>(action_shape_.size()));
    fp = mix64(fp ^ (action_shape_.is_vector() ? 2u : 1u));
    total_size_ = offset;
    fingerprint_ = fp;
}

const FieldInfo* StateSchema::find(std::string_view name) const {
    for (const auto& f : fields_) {
        if (f.name == name) return &f;
    }
    return nullptr;
}

int StateSchema::field_index(std::string_view name) const {
    for (std::size_t i = 0; i < fields_.size(); ++i) {
        if (fields_[i].name == name) return static_cast<int>(i);
    }
    return -1;
}

}  // namespace mdpforge::env
