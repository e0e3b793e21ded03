#pragma once

#include "ptso/register_machine.hpp"

namespace ptso {

/// Replaces SET and comparison actions by INC/DEC/CKZ gadgets.  One extra
/// register (`aux`, renamed on collision) is added when the machine uses
/// tier-3 actions; it is 0 whenever control is in an original state.
RegisterMachine lower_tier3_to_tier2(const RegisterMachine& rm);

/// Replaces INC/DEC/CKZ by READ/WRITE fans over the register domain.
RegisterMachine lower_tier2_to_tier1(const RegisterMachine& rm);

/// Both stages.
RegisterMachine lower_to_tier1(const RegisterMachine& rm);

}  // namespace ptso
