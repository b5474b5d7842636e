#include "syncfn/format.hpp"

#include <charconv>

namespace syncfn {

std::string format_shortest(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace syncfn
