#include "gz/error.hpp"

namespace gz {

void throw_domain(const std::string& what) { throw DomainError(what); }

}  // namespace gz
