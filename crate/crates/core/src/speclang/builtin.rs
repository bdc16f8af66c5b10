//! Documents shipped with the binary.

/// Vector A with field strength F, and a charged, charge-doubled spinor ψ.
/// The couplings are illustrative and make no claim of matching QED.
pub const INTERACTING_ONE_HALF: &str = "\
# Spin-1 vector A with field strength F coupled to a charged spin-1/2 field psi.
# Illustrative only: no claim of matching QED conventions.

[fields]
template vector-fieldstrength A F
template dirac-doubled psi
set psi charge=1

[lagrangian]
kinematic
term 1 (A UA^m UA^m A)
term 1 (F UA^m UA^m F)
term 1 (psi US^m US^m psi)
term 1 (A UA^m F) (psi* US^m US^n US^r psi)

[options]
phase-s = 1
phase-c = 1
normal = t
";

pub const EXAMPLES: [(&str, &str); 1] = [("interacting-1-half", INTERACTING_ONE_HALF)];
