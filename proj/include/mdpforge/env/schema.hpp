#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mdpforge::env {

// Static shape of a field or expression: a scalar or a fixed-length vector.
struct Shape {
    enum class Kind { Scalar, Vector };
    Kind kind = Kind::Scalar;
    int length = 1;  // meaningful for vectors only

    static Shape scalar() { return {Kind::Scalar, 1}; }
    static Shape vector(int n) { return {Kind::Vector, n}; }
    bool is_scalar() const { return kind == Kind::Scalar; }
    bool is_vector() const { return kind == Kind::Vector; }
    // element count when laid out flat
    int size() const { return is_scalar() ? 1 : length; }

    friend bool operator==(const Shape& a, const Shape& b) {
        return a.kind == b.kind && (a.is_scalar() || a.length == b.length);
    }
};

struct FieldInfo {
    std::string name;
    Shape shape;
    std::string doc;
    int offset = 0;  // flat offset into StateRecord::data
};

// Ordered, fixed field layout of an environment's raw state plus its action
// shape. Field names are unique.
class StateSchema {
public:
    StateSchema() = default;
    StateSchema(std::vector<FieldInfo> fields, Shape action_shape);

    const std::vector<FieldInfo>& fields() const { return fields_; }
    const FieldInfo* find(std::string_view name) const;
    int field_index(std::string_view name) const;  // -1 if absent
    int total_size() const { return total_size_; }
    const Shape& action_shape() const { return action_shape_; }

    // Stable digest of names/shapes; used to detect programs checked against a
    // different schema.
    std::uint64_t fingerprint() const { return fingerprint_; }

private:
    std::vector<FieldInfo> fields_;
    Shape action_shape_ = Shape::scalar();
    int total_size_ = 0;
    std::uint64_t fingerprint_ = 0;
};

// Flat value buffer laid out per the schema.
struct StateRecord {
    std::vector<double> data;
};

// Discrete actions are a single entry holding the action index; continuous
// actions hold one entry per dimension.
using Action = std::vector<double>;

}  // namespace mdpforge::env
