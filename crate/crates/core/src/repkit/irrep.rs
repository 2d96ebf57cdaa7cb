use alloc::format;
use alloc::string::String;
use core::fmt;

/// The symmetry groups the toolkit knows how to label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Group {
    /// The trivial group; G-tables over it are ordinary multiplication tables.
    One,
    Sl2,
    Gl(u32),
    S3,
}

/// How generators act on a tensor product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActionKind {
    /// Lie algebra generators, acting as derivations.
    Lie,
    /// Group elements, acting diagonally.
    Group,
}

impl Group {
    pub fn action_kind(self) -> ActionKind {
        match self {
            Group::S3 => ActionKind::Group,
            _ => ActionKind::Lie,
        }
    }

    /// Number of generator matrices a module must carry.
    ///
    /// SL(2): `E, H, F`. GL(k): `e_i = E_{i,i+1}` then `f_i = E_{i+1,i}`; the
    /// centre acts by zero on every labeled irrep, so these suffice.
    /// S3: `(12)` and `(123)`.
    pub fn generator_count(self) -> usize {
        match self {
            Group::One => 0,
            Group::Sl2 => 3,
            Group::Gl(k) => 2 * (k as usize - 1),
            Group::S3 => 2,
        }
    }

    pub fn generator_names(self) -> alloc::vec::Vec<String> {
        match self {
            Group::One => alloc::vec![],
            Group::Sl2 => ["E", "H", "F"].iter().map(|s| String::from(*s)).collect(),
            Group::Gl(k) => {
                let k = k as usize;
                let mut v: alloc::vec::Vec<String> = (1..k).map(|i| format!("E{}{}", i, i + 1)).collect();
                v.extend((1..k).map(|i| format!("E{}{}", i + 1, i)));
                v
            }
            Group::S3 => ["(12)", "(123)"].iter().map(|s| String::from(*s)).collect(),
        }
    }

    pub fn name(self) -> String {
        match self {
            Group::One => String::from("1"),
            Group::Sl2 => String::from("SL2"),
            Group::Gl(k) => format!("GL{}", k),
            Group::S3 => String::from("S3"),
        }
    }

    pub fn parse(s: &str) -> Option<Group> {
        match s {
            "1" => Some(Group::One),
            "SL2" => Some(Group::Sl2),
            "S3" => Some(Group::S3),
            _ => {
                let k: u32 = s.strip_prefix("GL")?.parse().ok()?;
                (k >= 2).then_some(Group::Gl(k))
            }
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GlLabel {
    Trivial,
    Adjoint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum S3Label {
    Tr,
    Sg,
    Std,
}

impl S3Label {
    pub const ALL: [S3Label; 3] = [S3Label::Tr, S3Label::Sg, S3Label::Std];
}

/// An irreducible representation, named by group and label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IrrepId {
    One,
    /// Highest weight `n`, dimension `n + 1`.
    Sl2(u32),
    Gl {
        k: u32,
        label: GlLabel,
    },
    S3(S3Label),
}

impl IrrepId {
    pub fn group(self) -> Group {
        match self {
            IrrepId::One => Group::One,
            IrrepId::Sl2(_) => Group::Sl2,
            IrrepId::Gl { k, .. } => Group::Gl(k),
            IrrepId::S3(_) => Group::S3,
        }
    }

    pub fn dim(self) -> usize {
        match self {
            IrrepId::One => 1,
            IrrepId::Sl2(n) => n as usize + 1,
            IrrepId::Gl {
                label: GlLabel::Trivial,
                ..
            } => 1,
            IrrepId::Gl {
                k,
                label: GlLabel::Adjoint,
            } => (k * k - 1) as usize,
            IrrepId::S3(S3Label::Std) => 2,
            IrrepId::S3(_) => 1,
        }
    }

    /// The trivial representation of `group`.
    pub fn trivial(group: Group) -> IrrepId {
        match group {
            Group::One => IrrepId::One,
            Group::Sl2 => IrrepId::Sl2(0),
            Group::Gl(k) => IrrepId::Gl {
                k,
                label: GlLabel::Trivial,
            },
            Group::S3 => IrrepId::S3(S3Label::Tr),
        }
    }

    pub fn is_trivial(self) -> bool {
        self == IrrepId::trivial(self.group())
    }

    /// Label without the group, as used in JSON.
    pub fn label(self) -> String {
        match self {
            IrrepId::One => String::from("1"),
            IrrepId::Sl2(n) => format!("{}", n),
            IrrepId::Gl {
                label: GlLabel::Trivial,
                ..
            } => String::from("trivial"),
            IrrepId::Gl {
                label: GlLabel::Adjoint,
                ..
            } => String::from("adjoint"),
            IrrepId::S3(S3Label::Tr) => String::from("tr"),
            IrrepId::S3(S3Label::Sg) => String::from("sg"),
            IrrepId::S3(S3Label::Std) => String::from("std"),
        }
    }

    pub fn from_parts(group: Group, label: &str) -> Option<IrrepId> {
        match group {
            Group::One => (label == "1").then_some(IrrepId::One),
            Group::Sl2 => label.parse().ok().map(IrrepId::Sl2),
            Group::Gl(k) => match label {
                "trivial" => Some(IrrepId::Gl {
                    k,
                    label: GlLabel::Trivial,
                }),
                "adjoint" => Some(IrrepId::Gl {
                    k,
                    label: GlLabel::Adjoint,
                }),
                _ => None,
            },
            Group::S3 => match label {
                "tr" => Some(IrrepId::S3(S3Label::Tr)),
                "sg" => Some(IrrepId::S3(S3Label::Sg)),
                "std" => Some(IrrepId::S3(S3Label::Std)),
                _ => None,
            },
        }
    }
}

impl fmt::Display for IrrepId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrepId::One => f.write_str("K"),
            IrrepId::Sl2(n) => write!(f, "V{}", n),
            IrrepId::Gl {
                label: GlLabel::Trivial,
                ..
            } => f.write_str("I"),
            IrrepId::Gl {
                label: GlLabel::Adjoint,
                ..
            } => f.write_str("Ad"),
            IrrepId::S3(l) => f.write_str(&IrrepId::S3(*l).label()),
        }
    }
}
