"""Known-good reference chains used as regression fixtures.

Each entry is a previously generated (q, N) pair for base d = 2: the cubic
rows all satisfy N² + N + 1 = 21·q, the degree-5 rows satisfy
Phi_5(N) = 5·q.  The bits column is the nominal size of N.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ring import cyclotomic_value


@dataclass(frozen=True)
class ReferenceChain:
    bits: int
    q: int
    N: int
    p: int = 3

    @property
    def k(self) -> int:
        return cyclotomic_value(self.N, self.p) // self.q


REFERENCE_BASE_D = 2

REFERENCE_CHAINS_DEGREE3 = (
    ReferenceChain(
        bits=64,
        q=10660445468176975012437931337857311901,
        N=14962264361777480479,
    ),
    ReferenceChain(
        bits=128,
        q=int(
            "7033487577083868074140301785532669443393418408540382552292489482"
            "981777670573"
        ),
        N=384321791105788365960434389112751695311,
    ),
    ReferenceChain(
        bits=192,
        q=int(
            "3366794104046013688813861775449746509702327309047453065782187841"
            "311961386939893656124168619891862834134564751320781"
        ),
        N=8408488341251731049170026360825540596083668450087019223599,
    ),
    ReferenceChain(
        bits=256,
        q=int(
            "1384797724330961881127990988099580668064177201798393364023278902"
            "6849758780357602098745509903402369297326701820135813499813427560"
            "40383443515084076318821511"
        ),
        N=int(
            "1705307954914601326468769138407093647897515425037185894628696836"
            "57599587157169"
        ),
    ),
    ReferenceChain(
        bits=384,
        q=int(
            "4988704080439097080026974843956966283737684558825362284007638167"
            "2140059207167442875712266085599225828593787849079217276964030051"
            "9603044607727401787754682179716349955864052363477510799553879291"
            "50974029156720267957539026223965263871"
        ),
        N=int(
            "3236707983263566498421921412058882745007888236451818814089513277"
            "0223858919802192066977479776096346518300592684394809"
        ),
    ),
)

REFERENCE_CHAINS_DEGREE5 = (
    ReferenceChain(
        bits=32,
        q=2318879223369766908647165365703390383681,
        N=10376766241,
        p=5,
    ),
    ReferenceChain(
        bits=64,
        q=int(
            "4472100928452149897742558073427279860169219404329905811894567273"
            "15492379380481"
        ),
        N=38669664147672032641,
        p=5,
    ),
    ReferenceChain(
        bits=96,
        q=int(
            "1625537387286824001820950409857065706766584860444877409284911542"
            "60714395696121776189931784946227753354235834300261361"
        ),
        N=168846375253285135510273220281,
        p=5,
    ),
    ReferenceChain(
        bits=128,
        q=int(
            "1677868795061963263287256716444303921242132462810522032228230401"
            "6828751194078660564885447049858117615322953444446856029202812457"
            "536585170449337489971012221"
        ),
        N=538185509554172163344449011382424989511,
        p=5,
    ),
)
