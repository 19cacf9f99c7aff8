#include "xmd/container.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <numeric>

#include <json.hpp>

#include "xmd/errors.hpp"

namespace xmd {
namespace {

constexpr char kMagic[4] = {'X', 'M', 'D', '1'};

std::size_t dtype_size(TensorContainer::DType d) {
    switch (d) {
        case TensorContainer::DType::F32: return 4;
        case TensorContainer::DType::I32: return 4;
        case TensorContainer::DType::U8: return 1;
    }
    return 0;
}

const char* dtype_name(TensorContainer::DType d) {
    switch (d) {
        case TensorContainer::DType::F32: return "f32";
        case TensorContainer::DType::I32: return "i32";
        case TensorContainer::DType::U8: return "u8";
    }
    return "?";
}

TensorContainer::DType dtype_from_name(const std::string& s) {
    if (s == "f32") return TensorContainer::DType::F32;
    if (s == "i32") return TensorContainer::DType::I32;
    if (s == "u8") return TensorContainer::DType::U8;
    throw BadHeaderError("container: unknown dtype '" + s + "'");
}

std::int64_t element_count(const std::vector<std::int64_t>& shape) {
    std::int64_t n = 1;
    for (auto d : shape) {
        if (d < 0) throw BadHeaderError("container: negative shape dimension");
        n *= d;
    }
    return n;
}

// Scalars are serialized little-endian regardless of host order.
template <typename T>
void append_le(std::vector<std::uint8_t>& out, T v) {
    static_assert(std::is_trivially_copyable_v<T>);
    std::uint8_t buf[sizeof(T)];
    std::memcpy(buf, &v, sizeof(T));
    if constexpr (std::endian::native == std::endian::big)
        std::reverse(buf, buf + sizeof(T));
    out.insert(out.end(), buf, buf + sizeof(T));
}

template <typename T>
T read_le(const std::uint8_t* p) {
    std::uint8_t buf[sizeof(T)];
    std::memcpy(buf, p, sizeof(T));
    if constexpr (std::endian::native == std::endian::big)
        std::reverse(buf, buf + sizeof(T));
    T v;
    std::memcpy(&v, buf, sizeof(T));
    return v;
}

template <typename T>
std::vector<std::uint8_t> pack(const std::vector<T>& values) {
    std::vector<std::uint8_t> out;
    out.reserve(values.size() * sizeof(T));
    for (const T& v : values) append_le(out, v);
    return out;
}

template <typename T>
std::vector<T> unpack(const std::vector<std::uint8_t>& bytes) {
    std::vector<T> out(bytes.size() / sizeof(T));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = read_le<T>(bytes.data() + i * sizeof(T));
    return out;
}

}  // namespace

void TensorContainer::add_f32(const std::string& name, std::vector<std::int64_t> shape,
                              const std::vector<float>& values) {
    if (static_cast<std::int64_t>(values.size()) != element_count(shape))
        throw BadHeaderError("container: shape/value count mismatch for " + name);
    entries_.push_back({name, DType::F32, std::move(shape), pack(values)});
}

void TensorContainer::add_i32(const std::string& name, std::vector<std::int64_t> shape,
                              const std::vector<std::int32_t>& values) {
    if (static_cast<std::int64_t>(values.size()) != element_count(shape))
        throw BadHeaderError("container: shape/value count mismatch for " + name);
    entries_.push_back({name, DType::I32, std::move(shape), pack(values)});
}

void TensorContainer::add_u8(const std::string& name, std::vector<std::int64_t> shape,
                             const std::vector<std::uint8_t>& values) {
    if (static_cast<std::int64_t>(values.size()) != element_count(shape))
        throw BadHeaderError("container: shape/value count mismatch for " + name);
    entries_.push_back({name, DType::U8, std::move(shape), values});
}

bool TensorContainer::has(const std::string& name) const {
    for (const auto& e : entries_)
        if (e.name == name) return true;
    return false;
}

const TensorContainer::Entry& TensorContainer::entry(const std::string& name) const {
    for (const auto& e : entries_)
        if (e.name == name) return e;
    throw BadHeaderError("container: missing tensor '" + name + "'");
}

std::vector<float> TensorContainer::get_f32(const std::string& name) const {
    const Entry& e = entry(name);
    if (e.dtype != DType::F32) throw BadHeaderError("container: " + name + " is not f32");
    return unpack<float>(e.bytes);
}

std::vector<std::int32_t> TensorContainer::get_i32(const std::string& name) const {
    const Entry& e = entry(name);
    if (e.dtype != DType::I32) throw BadHeaderError("container: " + name + " is not i32");
    return unpack<std::int32_t>(e.bytes);
}

std::vector<std::uint8_t> TensorContainer::get_u8(const std::string& name) const {
    const Entry& e = entry(name);
    if (e.dtype != DType::U8) throw BadHeaderError("container: " + name + " is not u8");
    return e.bytes;
}

void TensorContainer::save(const std::string& path) const {
    nlohmann::ordered_json header;
    header["entries"] = nlohmann::ordered_json::array();
    std::uint64_t offset = 0;
    for (const auto& e : entries_) {
        nlohmann::ordered_json je;
        je["name"] = e.name;
        je["dtype"] = dtype_name(e.dtype);
        je["shape"] = e.shape;
        je["byte_offset"] = offset;
        header["entries"].push_back(je);
        offset += e.bytes.size();
    }
    header["meta"] = nlohmann::ordered_json::parse(meta_json);
    const std::string header_text = header.dump();

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("container: cannot open " + path + " for writing");
    out.write(kMagic, 4);
    std::vector<std::uint8_t> len;
    append_le<std::uint32_t>(len, static_cast<std::uint32_t>(header_text.size()));
    out.write(reinterpret_cast<const char*>(len.data()), 4);
    out.write(header_text.data(), static_cast<std::streamsize>(header_text.size()));
    for (const auto& e : entries_)
        out.write(reinterpret_cast<const char*>(e.bytes.data()),
                  static_cast<std::streamsize>(e.bytes.size()));
    if (!out) throw IoError("container: write failed for " + path);
}

TensorContainer TensorContainer::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("container: cannot open " + path);
    std::vector<std::uint8_t> raw((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
    if (raw.size() < 8) throw BadMagicError("container: file too short");
    if (std::memcmp(raw.data(), kMagic, 4) != 0)
        throw BadMagicError("container: bad magic bytes");
    const std::uint32_t hlen = read_le<std::uint32_t>(raw.data() + 4);
    if (8ull + hlen > raw.size()) throw BadHeaderError("container: header length out of bounds");
    const std::string header_text(raw.begin() + 8, raw.begin() + 8 + hlen);

    nlohmann::json header;
    try {
        header = nlohmann::json::parse(header_text);
    } catch (const nlohmann::json::exception& ex) {
        throw BadHeaderError(std::string("container: header is not valid JSON: ") + ex.what());
    }
    if (!header.contains("entries") || !header["entries"].is_array())
        throw BadHeaderError("container: header has no entry list");

    TensorContainer c;
    if (header.contains("meta")) c.meta_json = header["meta"].dump();

    const std::size_t payload_start = 8 + hlen;
    const std::size_t payload_size = raw.size() - payload_start;
    std::uint64_t covered = 0;
    std::uint64_t prev_end = 0;
    for (const auto& je : header["entries"]) {
        Entry e;
        try {
            e.name = je.at("name").get<std::string>();
            e.dtype = dtype_from_name(je.at("dtype").get<std::string>());
            e.shape = je.at("shape").get<std::vector<std::int64_t>>();
            const auto off = je.at("byte_offset").get<std::uint64_t>();
            const std::uint64_t nbytes =
                static_cast<std::uint64_t>(element_count(e.shape)) * dtype_size(e.dtype);
            if (off < prev_end)
                throw BadHeaderError("container: overlapping entries at " + e.name);
            if (off + nbytes > payload_size)
                throw BadHeaderError("container: entry " + e.name + " out of bounds");
            e.bytes.assign(raw.begin() + static_cast<std::ptrdiff_t>(payload_start + off),
                           raw.begin() + static_cast<std::ptrdiff_t>(payload_start + off + nbytes));
            prev_end = off + nbytes;
            covered += nbytes;
        } catch (const nlohmann::json::exception& ex) {
            throw BadHeaderError(std::string("container: malformed entry: ") + ex.what());
        }
        c.entries_.push_back(std::move(e));
    }
    (void)covered;
    return c;
}

}  // namespace xmd
