//! Generator matrices shipped with the tool and the parameters they are
//! expected to have.

use lcdembed_core::LinearCode;

use crate::format::{parse_code, ParseError};

/// How the minimum distance of a fixture is checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistanceCheck {
    Auto,
    /// Enumeration and low-weight search must both return the value.
    BothEngines,
    /// Low-weight search with this bound on the weight.
    LowWeight(usize),
}

/// The code obtained by deleting the last `ell` coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExpectedBase {
    pub n: usize,
    pub k: usize,
    pub ell: usize,
    pub d: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub name: &'static str,
    pub text: &'static str,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    /// Hull dimension; 0 for the LCD fixtures.
    pub ell: usize,
    pub distance: DistanceCheck,
    pub base: Option<ExpectedBase>,
}

impl Fixture {
    pub fn code(&self) -> Result<LinearCode, ParseError> {
        parse_code(self.text)
    }
}

macro_rules! fixture {
    ($name:literal) => {
        include_str!(concat!("../fixtures/", $name, ".txt"))
    };
}

const fn base(n: usize, k: usize, ell: usize, d: usize) -> Option<ExpectedBase> {
    Some(ExpectedBase { n, k, ell, d })
}

pub const FIXTURES: &[Fixture] = &[
    Fixture {
        name: "remark_10_4_4",
        text: fixture!("remark_10_4_4"),
        n: 10,
        k: 4,
        d: 4,
        ell: 0,
        distance: DistanceCheck::Auto,
        base: base(7, 4, 3, 3),
    },
    Fixture {
        name: "remark_hamming_7_4",
        text: fixture!("remark_hamming_7_4"),
        n: 7,
        k: 4,
        d: 3,
        ell: 3,
        distance: DistanceCheck::Auto,
        base: None,
    },
    Fixture {
        name: "H4_prime_binary",
        text: fixture!("H4_prime_binary"),
        n: 19,
        k: 11,
        d: 4,
        ell: 0,
        distance: DistanceCheck::BothEngines,
        base: base(15, 11, 4, 3),
    },
    Fixture {
        name: "H5_prime_binary",
        text: fixture!("H5_prime_binary"),
        n: 36,
        k: 26,
        d: 4,
        ell: 0,
        distance: DistanceCheck::LowWeight(4),
        base: base(31, 26, 5, 3),
    },
    Fixture {
        name: "H33_prime_ternary",
        text: fixture!("H33_prime_ternary"),
        n: 16,
        k: 10,
        d: 4,
        ell: 0,
        distance: DistanceCheck::Auto,
        base: base(13, 10, 3, 3),
    },
    Fixture {
        name: "H34_prime_ternary",
        text: fixture!("H34_prime_ternary"),
        n: 44,
        k: 36,
        d: 4,
        ell: 0,
        distance: DistanceCheck::LowWeight(4),
        base: base(40, 36, 4, 3),
    },
    Fixture {
        name: "C3_1",
        text: fixture!("C3_1"),
        n: 23,
        k: 4,
        d: 14,
        ell: 0,
        distance: DistanceCheck::Auto,
        base: base(19, 4, 4, 12),
    },
    Fixture {
        name: "C3_2",
        text: fixture!("C3_2"),
        n: 23,
        k: 5,
        d: 12,
        ell: 0,
        distance: DistanceCheck::Auto,
        base: base(19, 5, 4, 11),
    },
    Fixture {
        name: "C3_3",
        text: fixture!("C3_3"),
        n: 24,
        k: 6,
        d: 12,
        ell: 0,
        distance: DistanceCheck::Auto,
        base: base(20, 6, 4, 10),
    },
    Fixture {
        name: "C3_4",
        text: fixture!("C3_4"),
        n: 25,
        k: 5,
        d: 14,
        ell: 0,
        distance: DistanceCheck::Auto,
        base: base(20, 5, 5, 12),
    },
    Fixture {
        name: "C4_1",
        text: fixture!("C4_1"),
        n: 21,
        k: 10,
        d: 8,
        ell: 0,
        distance: DistanceCheck::Auto,
        base: base(20, 10, 1, 7),
    },
];

pub fn find(name: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name == name)
}
