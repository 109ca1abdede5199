#pragma once

namespace dignet {
class IntPoly;
class MultiPoly;
}  // namespace dignet
