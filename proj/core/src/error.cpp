#include "fleetic/error.hpp"

namespace fleetic {

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::validation:
      return 2;
    case ErrorKind::guard:
      return 3;
    case ErrorKind::io:
      return 4;
  }
  return 1;
}

}  // namespace fleetic
