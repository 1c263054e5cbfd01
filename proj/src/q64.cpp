#include "tcr/q64.hpp"

namespace tcr {

Q64 parse_q64(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Q64(std::stoll(s));
        int64_t n = std::stoll(s.substr(0, slash));
        int64_t d = std::stoll(s.substr(slash + 1));
        return Q64(n, d);
    } catch (const error&) {
        throw;
    } catch (const std::exception&) {
        fail(errc::validation, "bad rational literal: '" + s + "'");
    }
}

}  // namespace tcr
