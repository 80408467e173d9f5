"""
Country code sets used by location mapping
"""
from typing import FrozenSet

OTHER_COUNTRY = "OTH"
UNKNOWN_COUNTRY = "UNK"

# The 22 Arab League member states
ARAB_COUNTRIES: FrozenSet[str] = frozenset({
    "AE", "BH", "DJ", "DZ", "EG", "IQ", "JO", "KM", "KW", "LB", "LY",
    "MA", "MR", "OM", "PS", "QA", "SA", "SD", "SO", "SY", "TN", "YE",
})

# Closed output set of map_location
COUNTRY_CODES: FrozenSet[str] = ARAB_COUNTRIES | {OTHER_COUNTRY, UNKNOWN_COUNTRY}

# ISO 3166-1 alpha-2 officially assigned codes
ISO_ALPHA2: FrozenSet[str] = frozenset("""
AD AE AF AG AI AL AM AO AQ AR AS AT AU AW AX AZ
BA BB BD BE BF BG BH BI BJ BL BM BN BO BQ BR BS BT BV BW BY BZ
CA CC CD CF CG CH CI CK CL CM CN CO CR CU CV CW CX CY CZ
DE DJ DK DM DO DZ
EC EE EG EH ER ES ET
FI FJ FK FM FO FR
GA GB GD GE GF GG GH GI GL GM GN GP GQ GR GS GT GU GW GY
HK HM HN HR HT HU
ID IE IL IM IN IO IQ IR IS IT
JE JM JO JP
KE KG KH KI KM KN KP KR KW KY KZ
LA LB LC LI LK LR LS LT LU LV LY
MA MC MD ME MF MG MH MK ML MM MN MO MP MQ MR MS MT MU MV MW MX MY MZ
NA NC NE NF NG NI NL NO NP NR NU NZ
OM
PA PE PF PG PH PK PL PM PN PR PS PT PW PY
QA
RE RO RS RU RW
SA SB SC SD SE SG SH SI SJ SK SL SM SN SO SR SS ST SV SX SY SZ
TC TD TF TG TH TJ TK TL TM TN TO TR TT TV TW TZ
UA UG UM US UY UZ
VA VC VE VG VI VN VU
WF WS
YE YT
ZA ZM ZW
""".split())


def to_country_category(alpha2: str) -> str:
    """Collapse an ISO alpha-2 code into the Arab-world code set"""
    code = alpha2.upper()
    if code in ARAB_COUNTRIES:
        return code
    if code in ISO_ALPHA2:
        return OTHER_COUNTRY
    return UNKNOWN_COUNTRY
