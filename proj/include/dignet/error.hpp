#pragma once

#include <stdexcept>
#include <string>

namespace dignet {

enum class errc {
    input,         // malformed input, shape/range violations
    resource,      // configured resource bound exceeded
    disagreement,  // cross-check between two computation paths failed
    internal,      // broken invariant inside the library
};

class error : public std::runtime_error {
public:
    error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    errc kind() const noexcept { return kind_; }

private:
    errc kind_;
};

[[noreturn]] inline void throw_input(const std::string& what) { throw error(errc::input, what); }
[[noreturn]] inline void throw_resource(const std::string& what) { throw error(errc::resource, what); }
[[noreturn]] inline void throw_internal(const std::string& what) { throw error(errc::internal, what); }

}  // namespace dignet
