// Test-only reference value of pi, generated independently of the
// implementation (arbitrary-precision library, 1320 fractional digits).
// pi_reference() < pi < pi_reference() + 10^-1320.
#ifndef COMBCERT_TESTS_PI_REFERENCE_HPP
#define COMBCERT_TESTS_PI_REFERENCE_HPP

#include "combcert/bigint.hpp"

namespace combcert::oracles {

inline Rational pi_reference() {
  static const char* digits =
    "3141592653589793238462643383279502884197169399375105820974944592307816406286"
    "2089986280348253421170679821480865132823066470938446095505822317253594081284"
    "8111745028410270193852110555964462294895493038196442881097566593344612847564"
    "8233786783165271201909145648566923460348610454326648213393607260249141273724"
    "5870066063155881748815209209628292540917153643678925903600113305305488204665"
    "2138414695194151160943305727036575959195309218611738193261179310511854807446"
    "2379962749567351885752724891227938183011949129833673362440656643086021394946"
    "3952247371907021798609437027705392171762931767523846748184676694051320005681"
    "2714526356082778577134275778960917363717872146844090122495343014654958537105"
    "0792279689258923542019956112129021960864034418159813629774771309960518707211"
    "3499999983729780499510597317328160963185950244594553469083026425223082533446"
    "8503526193118817101000313783875288658753320838142061717766914730359825349042"
    "8755468731159562863882353787593751957781857780532171226806613001927876611195"
    "9092164201989380952572010654858632788659361533818279682303019520353018529689"
    "9577362259941389124972177528347913151557485724245415069595082953311686172785"
    "5889075098381754637464939319255060400927701671139009848824012858361603563707"
    "6601047101819429555961989467678374494482553797747268471040475346462080466842"
    "59069491293313677028989152104";
  BigInt num(digits);
  BigInt den = 1;
  for (int i = 0; i < 132; ++i) den *= 10000000000LL;  // 10^1320
  return Rational(num, den);
}

}  // namespace combcert::oracles

#endif  // COMBCERT_TESTS_PI_REFERENCE_HPP
