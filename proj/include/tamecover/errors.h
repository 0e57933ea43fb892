#ifndef TAMECOVER_ERRORS_H
#define TAMECOVER_ERRORS_H

#include <stdexcept>

namespace tamecover
{

/// A configured search or size bound was exceeded.
class BoundError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace tamecover

#endif // TAMECOVER_ERRORS_H
