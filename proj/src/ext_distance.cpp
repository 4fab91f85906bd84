#include "qfloyd/ext_distance.hpp"

namespace qfloyd {

std::string to_string(ExtDistance d) {
    return d.is_infinite() ? std::string("INF") : std::to_string(d.value());
}

std::ostream& operator<<(std::ostream& os, ExtDistance d) { return os << to_string(d); }

}  // namespace qfloyd
