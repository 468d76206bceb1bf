use core::fmt;

pub const NVARS: usize = 20;

/// The fixed, globally ordered set of indeterminates. Declaration order is the
/// variable order used by the monomial ordering (`A1` is the largest).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    A1,
    A2,
    A3,
    A4,
    T,
    U,
    V,
    /// lower-case `u`
    LowerU,
    /// lower-case `v`
    LowerV,
    C1,
    C2,
    C3,
    /// lower-case `x`
    LowerX,
    X,
    Y,
    A,
    B,
    C,
    D,
    E,
}

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::A1,
        Var::A2,
        Var::A3,
        Var::A4,
        Var::T,
        Var::U,
        Var::V,
        Var::LowerU,
        Var::LowerV,
        Var::C1,
        Var::C2,
        Var::C3,
        Var::LowerX,
        Var::X,
        Var::Y,
        Var::A,
        Var::B,
        Var::C,
        Var::D,
        Var::E,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        const NAMES: [&str; NVARS] =
            ["a1", "a2", "a3", "a4", "T", "U", "V", "u", "v", "c1", "c2", "c3", "x", "X", "Y", "A", "B", "C", "D", "E"];
        NAMES[self.index()]
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == name)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
