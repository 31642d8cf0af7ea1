#pragma once

namespace parsearch {

/// Burns roughly `ms` milliseconds of CPU in a busy loop calibrated once per
/// process. Used to emulate expensive edge evaluation: unlike a sleep, the
/// work occupies a core, so parallel speedup stays honest.
void busy_wait_ms(double ms);

}  // namespace parsearch
