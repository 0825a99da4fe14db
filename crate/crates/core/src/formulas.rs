//! The printed closed forms, kept as text close to how they were typeset and
//! parsed on first use. Keeping them as text makes each one easy to diff
//! against its source; the consistency checks in the family modules are what
//! actually vouch for them.

use std::sync::OnceLock;

use crate::exact::{ExactError, Field, MPoly};

pub struct Formula {
    pub name: &'static str,
    pub text: &'static str,
    pub vars: &'static [&'static str],
    parsed: OnceLock<MPoly>,
}

impl Formula {
    pub const fn new(name: &'static str, vars: &'static [&'static str], text: &'static str) -> Self {
        Formula {
            name,
            text,
            vars,
            parsed: OnceLock::new(),
        }
    }

    /// Panics if the stored text does not parse; the unit tests parse every
    /// entry.
    pub fn poly(&self) -> &MPoly {
        self.parsed.get_or_init(|| {
            MPoly::parse(self.text, self.vars)
                .unwrap_or_else(|e| panic!("formula {} does not parse: {e}", self.name))
        })
    }

    pub fn eval<F: Field>(&self, at: &[(&str, F)]) -> Result<F, ExactError> {
        self.poly().eval(at)
    }
}

const AC: &[&str] = &["a", "c"];
const W: &[&str] = &["w_1", "w_2"];
const WJ1: &[&str] = &["w_1", "j_1"];
const WJ: &[&str] = &["w_1", "j"];
const JJ1: &[&str] = &["j", "j_1"];
const I12: &[&str] = &["i_1", "i_2"];
const UV: &[&str] = &["u", "v"];
const U: &[&str] = &["u"];
const DT: &[&str] = &["d", "t"];

// Degree 3, generic family.

pub static GEN_B_NUM: Formula = Formula::new("b numerator", AC, "4(2a-3)c + a^2(a-1)^2");
pub static GEN_D_NUM: Formula = Formula::new("d numerator", AC, "a(a-2)");
pub static GEN_T_NUM: Formula = Formula::new("t numerator", AC, "a^3(a-2)");

pub static GEN_A: Formula = Formula::new(
    "A",
    AC,
    "a^{12}-8a^{11}+16c^2a^8+11664c^2+36720c^2a^4-69984c^2a^3-192c^2a^7+77760c^2a^2
     -46656c^2a + 1920c^2a^6-11232c^2a^5-4a^{10}c+26a^{10}-44a^9+41a^8-20a^7+220a^8c
     -904a^7c+ 1740a^6c-1800a^5c-8a^9c-216ca^3+4a^6+972ca^4",
);

pub static GEN_C: Formula = Formula::new(
    "C",
    AC,
    "a^6-4a^5+5a^4-2a^3-32a^3c+144ca^2-216ca+108c",
);

pub static GEN_B: Formula = Formula::new("B", AC, "a^4-2a^3+a^2-24ca+36c");

// Degree 3, degenerate family.

pub static EQ1: Formula = Formula::new(
    "w1-w2 relation",
    W,
    "w_1^4-4w_1^3w_2+6w_1^2w_2-4w_1w_2+w_2^2",
);

pub static W3_NUM: Formula = Formula::new(
    "w3 numerator",
    W,
    "(4w_1^3-7w_1^2+4w_1-w_2)^3 (4w_1^3-3w_1^2-w_2)",
);

/// Factors of the `w3` denominator, each checked separately.
pub static W3_DEN: [Formula; 3] = [
    Formula::new("w1", W, "w_1"),
    Formula::new("w1 - 1", W, "w_1-1"),
    Formula::new("4w1^3-6w1^2+3w1-w2", W, "4w_1^3-6w_1^2+3w_1-w_2"),
];

pub static S_INNER_NUM: Formula = Formula::new(
    "s inner numerator",
    W,
    "w_1(w_1-1) (4w_1^3-7w_1^2+4w_1-w_2)(4w_1^3-5w_1^2+2w_1-w_2)",
);

pub static S_DEN: [Formula; 3] = [
    Formula::new("4w1^3-9w1^2-w2+6w1", W, "4w_1^3-9w_1^2-w_2+6w_1"),
    Formula::new("4w1^3-3w1^2-w2", W, "4w_1^3-3w_1^2-w_2"),
    Formula::new("4w1^3-6w1^2+3w1-w2", W, "4w_1^3-6w_1^2+3w_1-w_2"),
];

pub static J1_W1: Formula = Formula::new(
    "j1-w1 relation",
    WJ1,
    "2617344w_1^2+38637j_1w_1^7-17496j_1w_1^6-29207808w_1^5-7569408w_1^3-7569408w_1^15
     -729w_1^4j_1+5103j_1w_1^5+69984j_1w_1^9-60507j_1w_1^8+65536-589824w_1+16411392w_1^4
     -29207808w_1^{13}+44960208w_1^{12}-60666336w_1^{11}+72010800w_1^{10}+44960208w_1^6
     -60666336w_1^7+72010800w_1^8-75998272w_1^9+16411392w_1^{14}+2617344w_1^{16}-589824w_1^{17}
     -60507j_1w_1^{10}+38637j_1w_1^{11}-17496j_1w_1^{12}+5103j_1w_1^{13}-729j_1w_1^{14}+65536w_1^{18}",
);

pub static J_W1: Formula = Formula::new(
    "j-w1 relation",
    WJ,
    "65536w_1^6-196608w_1^5+356352w_1^4-385024w_1^3+(289536-9j)w_1^2
     +(-129792+9j)w_1+35152-9j",
);

pub static CUBIC_A: Formula = Formula::new("A(j)", JJ1, "(9j-35152)^4");

pub static CUBIC_B: Formula = Formula::new(
    "B(j)",
    JJ1,
    "-2187j^7+38996640j^6-277882258176j^5+998642127618048j^4
     -1868045010870009856j^3 +1669509508048367910912j^2
     -543484034691057422696448j +16612482057244821172518912",
);

pub static CUBIC_C: Formula = Formula::new(
    "C(j)",
    JJ1,
    "27j^8+1125216j^7+9650655872j^6-31593875152896j^5+27748804997283840j^4
     +1114515284358510673920j^3 -6061989956030939246100480j^2
     +8346397859247767524611194880j +353019691006036487376293855232",
);

pub static CUBIC_D: Formula = Formula::new(
    "D(j)",
    JJ1,
    "(j^3+33120j^2+290490624j-310747594752)^3",
);

pub static S_ABS: Formula = Formula::new(
    "S",
    I12,
    "247945848003i_1^3-409722141024i_1^2-7591354214400i_1+17736744960000
     +61379512488i_1i_2+ 64268527400i_1^2i_2-2031496516224i_2",
);

pub static T_ABS: Formula = Formula::new(
    "T",
    I12,
    "1034723291140i_1^2i_2-3175485076512i_1i_2-7250280129792i_2+1670535171333i_1^3
     +366156782208i_1^2-67382113075200i_1+141893959680000",
);

// Degree 5.

pub static DEG5_CONIC: Formula = Formula::new(
    "degree-5 constraint",
    UV,
    "15u^4-82u^3-8vu^2+159u^2-140u+56vu-16v^2-52v+50",
);

pub static DEG5_D_NUM: Formula = Formula::new("d numerator", UV, "(3u^2-4u-4v+1)^2");

pub static DEG5_W_NUM: Formula = Formula::new("w numerator", UV, "-(u^2-6u+4v+5)(u^2-4v)");

pub static DEG5_T_NUM: Formula = Formula::new(
    "t numerator",
    UV,
    "(u^2-4v)(-8u^4+24u^3+63u^2+64v^2-192uv+196v+16u^2v-180u+100)",
);

pub static DEG5_DEN: [Formula; 2] = [
    Formula::new("2u-3", UV, "2u-3"),
    Formula::new("6u^2-10u+5-8v", UV, "6u^2-10u+5-8v"),
];

pub static DEG5_A: Formula = Formula::new(
    "A(u)",
    U,
    "(u-1)^2(u-2)^2(3u-4)^6(3u-5)^6(2u^2-6u+5)^8",
);

pub static DEG5_B: Formula = Formula::new(
    "B(u)",
    U,
    "-16(-7105017544704u^{33}-2816860828336128u^{31}+175917390077952u^{32}+
     623116122491175945628520u^{12}+ 165647363105986609+1071822623072391493632u^{24}
     -697664908494919962734400u^{13}+ 10165770178171535328256u^{22}-
     3521178077017962627072u^{23}- 611366039933419582356480u^{15}+
     211088208801275293447168u^{18}-117843339238828016262912u^{19}-
     337258769605584067064448u^{17}+480799396622391815599360u^{16}+
     58612898603387517569664u^20+139314069504u^{34}-12909484419880734720u^{27}-
     284837487810868721664u^{25}+65530387559293083648u^{26}+40376325064521521748u^2-
     284029170057918018876u^3-3711757861451181852u-5749828391735587589364u^5+
     1452158564376272108306u^4+18345524820571264661416u^6-
     48457022965012856084616u^7+ 108027612722856481764222u^8-
     206208961788595840640856u^9+340743378168336968325408u^{10}-
     491546319356455960291344u^{11}-25922857282984031345664u^{21}+
     692593865844403162989888u^{14}+ 32784067604201472u^{30}+2146611912787372032u^{28}
     -295513372833693696u^{29})(2u^2-6u+5)^4",
);

pub static DEG5_C: Formula = Formula::new(
    "C(u)",
    U,
    "256(186624u^{16}-4478976u^{15}+50512896u^{14}-355332096u^{13}+1744993152u^{12}
     -6343287552u^{11}+17655393792u^{10}-38378452608u^9+65842249648u^8
     - 89441495616u^7+95875417216u^6-80237127456u^5 +51388251464u^4-24345314544u^3
     +8044840448u^2-1656421080u+160064701)^3",
);

// Degree 7.

pub static DEG7_A_NUM: Formula = Formula::new(
    "a numerator",
    DT,
    "7d^{20}+424t^{4}d^{8}-11072d^{12}t^{3}+2368t^{3}d^{13}-872d^{16}t^{2}-1532d^{17}t-21568d^{14}t^{2}-56d^{19}t
     + 478d^{18}t+36t^{5}d-42t^{5}d^{2}+18160t^{3}d^{11}-4356t^{3}d^{10}-624t^{4}d^{6}+8t^{5}d^{3}-736t^{4}d^{7}
     -52594t^{2}d^{12}+624td^{14}-2576td^{15}+2725td^{16}+736td^{13}-36d^{19}-2368t^{2}d^{7}+42d^{18}
     + 6112d^{15}t^{2} - 29576t^{3}d^{9} - 7t^{5} +52594t^{3}d^{8} - 44496t^{3}d^{7} + 2576t^{4}d^{5}-2725t^{4}d^{4}
     + 1532t^{4}d^{3} + 56t^{4}d + 872t^{3}d^{4}-6112t^{3}d^{5}-478t^{4}d^{2} - 18160d^{9}t^{2} - 424d^{12}t +
     11072d^{8}t^{2}
     -8d^{17} +44496t^{2}d^{13}+ 21568t^{3}d^{6}+ 4356d^{10}t^{2}+ 29576t^{2}d^{11}",
);

pub static DEG7_B_NUM: Formula = Formula::new(
    "b numerator",
    DT,
    "-14d^{21}+77d^{20}+400d^{9}t^{4}-3496t^{4}d^{8}+94280d^{12}t^{3}+1680t^{3}d^{14}-21232t^{3}d^{13}
     + 1008d^{17}t^{2} + 35d^{17}t+ 31612d^{14}t^{2} + 84d^{20}t- 616d^{19}t + 1313d^{18}t - 77t^{5}d + 121t^{5}d^{2}
     -10356t^{4}d^{6}-72t^{5}d^{3}+9016t^{4}d^{7}+20t^{5}d^{4}-139344t^{2}d^{13}+269886t^{2}d^{12}-9016td^{14}
     - 5222td^{16} + 3496td^{13} - 121d^{19} - 1680t^{2}d^{7} - 20d^{17}+ 72d^{18}+ 5352d^{15}t^{2} - 269886t^{3}d^{9}
     + 139344t^{3}d^{8}-31612t^{3}d^{7}+5222t^{4}d^{5}-35t^{4}d^{4}-5352t^{3}d^{6}-1313t^{4}d^{3}-84t^{4}d-1008t^{3}d^{4}
     + 616t^{4}d^{2} - 94280d^{9}t^{2} - 400d^{12}t + 21232d^{8}t^{2} + 219712d^{10}t^{2} - 308478t^{2}d^{11}+ 308478t^{3}d^{10}
     - 219712t^{3}d^{11}+ 5080t^{3}d^{5}-5080d^{16}t^{2}+10356td^{15}+ 14t^{5}",
);

/// The polynomial squared in the `c` formula.
pub static DEG7_C_INNER: Formula = Formula::new(
    "c inner polynomial",
    DT,
    "28d^{11}-7d^{12}-561d^{4}t^{2}-1800d^{7}t+84d^{10}t+12t^{2}d+364t^{2}d^{3}-118t^{2}d^{2}+t^{3}
     + 20d^{9} + 120td^{4} - 608td^{5}+ 1400td^{6} +  1311td^{8}- 42d^{10} - 140d^{6}t^{2}-504d^{9}t+ 440d^{5}t^{2}",
);

/// Factors of the common denominator `A(t, d)`.
pub static DEG7_DEN: [Formula; 3] = [
    Formula::new("d", DT, "d"),
    Formula::new(
        "A first factor",
        DT,
        "90d^{4}t^{2}-36d^{7}t-9t^{2}d-84t^{2}d^{3}+36t^{2}d^{2}+t^{3}-d^{9}+36td^{4}-90td^{5}+84td^{6}
         +9td^{8} -36d^{5}t^{2}",
    ),
    Formula::new(
        "A second factor",
        DT,
        "168td^{6}-t^{2}-168td^{5}- 20td^{3}  + 6t^{2}d-10t^{2}d^{2} + 5t^{2}d^{3}+90td^{4}-90d^{7}t + 20td^{8}
         - 6d^{10} + d^{11} + 10d^{9} - 5d^{8}",
    ),
];

pub static DEG7_CONSTRAINT: Formula = Formula::new(
    "degree-7 constraint",
    DT,
    "d^{16} - 16(td^{15}+t^{3}d) + 120td^{14} - 560td^{13}+ (400t^{2} + 1420t)d^{12} - (2400t^{2} +1968t)d^{11}
     + (6608t^{2} + 1400t)d^{10} - (11040t^{2}+400t)d^{9} + 12870t^{2}d^{8}- (400t^{3}+11040t^{2})d^{7} +  120t^{3}d^{2}
     + (1400t^{3} + 6608t^{2})d^{6} - (1968t^{3} +2400t^{2})d^{5}+
     (1420t^{3} + 400t^{2})d^{4} - 560t^{3}d^{3}   + t^{4}",
);

/// Every formula, for listing and for the parse test.
pub fn all() -> Vec<&'static Formula> {
    let mut v: Vec<&'static Formula> = vec![
        &GEN_B_NUM, &GEN_D_NUM, &GEN_T_NUM, &GEN_A, &GEN_C, &GEN_B, &EQ1, &W3_NUM, &S_INNER_NUM,
        &J1_W1, &J_W1, &CUBIC_A, &CUBIC_B, &CUBIC_C, &CUBIC_D, &S_ABS, &T_ABS, &DEG5_CONIC,
        &DEG5_D_NUM, &DEG5_W_NUM, &DEG5_T_NUM, &DEG5_A, &DEG5_B, &DEG5_C, &DEG7_A_NUM,
        &DEG7_B_NUM, &DEG7_C_INNER, &DEG7_CONSTRAINT,
    ];
    v.extend(W3_DEN.iter());
    v.extend(S_DEN.iter());
    v.extend(DEG5_DEN.iter());
    v.extend(DEG7_DEN.iter());
    v
}
