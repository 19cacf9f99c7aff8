#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace xmd {

// Binary tensor container:
//   bytes 0..3   magic "XMD1"
//   bytes 4..7   header length (little-endian u32)
//   header       UTF-8 JSON: {"entries":[{name,dtype,shape,byte_offset},...],
//                             "meta": {...}}
//   payload      concatenated little-endian arrays, offsets relative to the
//                start of the payload
// Offsets must be non-overlapping and in-bounds; shapes must match the byte
// length implied by the dtype. Files are little-endian on every host.
class TensorContainer {
public:
    enum class DType { F32, I32, U8 };

    struct Entry {
        std::string name;
        DType dtype;
        std::vector<std::int64_t> shape;
        std::vector<std::uint8_t> bytes;  // raw little-endian payload
    };

    void add_f32(const std::string& name, std::vector<std::int64_t> shape,
                 const std::vector<float>& values);
    void add_i32(const std::string& name, std::vector<std::int64_t> shape,
                 const std::vector<std::int32_t>& values);
    void add_u8(const std::string& name, std::vector<std::int64_t> shape,
                const std::vector<std::uint8_t>& values);

    bool has(const std::string& name) const;
    const Entry& entry(const std::string& name) const;  // throws BadHeaderError

    std::vector<float> get_f32(const std::string& name) const;
    std::vector<std::int32_t> get_i32(const std::string& name) const;
    std::vector<std::uint8_t> get_u8(const std::string& name) const;

    const std::vector<Entry>& entries() const { return entries_; }

    // Free-form metadata carried in the header next to the entry list.
    std::string meta_json = "{}";

    void save(const std::string& path) const;
    static TensorContainer load(const std::string& path);

private:
    std::vector<Entry> entries_;
};

}  // namespace xmd
