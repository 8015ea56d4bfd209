//! Closed-form maxima of the Zagreb indices over `CT(n, k)` and `CT*(n, b)`.
//!
//! Every regime test is an integer comparison after cross-multiplying, and
//! every division is checked to be exact. The degree censuses and edge-type
//! profiles of the maximizers are exposed alongside the values so that the
//! values can be re-derived from them.

use core::fmt;

use crate::error::BoundsError;
use crate::tree::{DegreeCensus, EdgeTypeMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Parameter is the number of segments `k`.
    Segments,
    /// Parameter is the number of branching vertices `b`.
    Branching,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Segments => "segments",
            Family::Branching => "branching",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Index {
    M1,
    M2,
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Index::M1 => "M1",
            Index::M2 => "M2",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClassQuery {
    pub family: Family,
    pub n: usize,
    pub p: usize,
    pub index: Index,
}

impl ClassQuery {
    pub fn new(family: Family, n: usize, p: usize, index: Index) -> Self {
        ClassQuery { family, n, p, index }
    }
}

/// Which closed form applies. Each variant is one case of the piecewise maxima.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Regime {
    /// `n = 1`: the class is the single vertex.
    SingleVertex,
    /// `k = 1` or `b = 0` with `n >= 2`: the class is the path.
    Path,
    /// `b = n/2 - 1`: only degrees 1 and 3 occur, every member attains both values.
    AllCubic,
    /// `M1` over `CT(n, k)`, `k ≡ 0, 1, 2 (mod 3)`.
    SegmentsM1Mod0,
    SegmentsM1Mod1,
    SegmentsM1Mod2,
    /// `M2` over `CT(n, 3)`: the three-legged spider.
    SegmentsM2K3,
    /// `k ≡ 0`, `3n < 5k + 3`.
    SegmentsM2Mod0Below,
    /// `k ≡ 0`, `3n = 5k + 3`.
    SegmentsM2Mod0Knife,
    /// `k ≡ 0`, `3n > 5k + 3`.
    SegmentsM2Mod0Above,
    /// `k ≡ 1`, `3n < 5k + 7`.
    SegmentsM2Mod1Below,
    /// `k ≡ 1`, `3n >= 5k + 7`.
    SegmentsM2Mod1Above,
    /// `k ≡ 2`, `k != 5`, `3n <= 5k - 7`.
    SegmentsM2Mod2Below,
    /// `k ≡ 2`, `k != 5`, `5k - 4 <= 3n <= 5k + 2`.
    SegmentsM2Mod2Band,
    /// `k ≡ 2`, `k != 5`, `3n > 5k + 2`.
    SegmentsM2Mod2Above,
    /// `k = 5`, `n < 10`.
    SegmentsM2K5Small,
    /// `k = 5`, `n >= 10`.
    SegmentsM2K5Large,
    /// `M1` over `CT*(n, b)`, `3b < n - 2`.
    BranchingM1Low,
    /// `M1` over `CT*(n, b)`, `n - 2 <= 3b < 3n/2 - 3`.
    BranchingM1High,
    /// `M2`, `5b <= n - 4`.
    BranchingM2Sparse,
    /// `M2`, `n - 4 < 5b` and `3b < n - 2`.
    BranchingM2Mixed,
    /// `M2`, `n - 2 <= 3b` and `7b < 3n - 4`.
    BranchingM2Dense,
    /// `M2`, `3n - 4 <= 7b` and `2b < n - 2`.
    BranchingM2Saturated,
}

impl Regime {
    pub const ALL: [Regime; 23] = [
        Regime::SingleVertex,
        Regime::Path,
        Regime::AllCubic,
        Regime::SegmentsM1Mod0,
        Regime::SegmentsM1Mod1,
        Regime::SegmentsM1Mod2,
        Regime::SegmentsM2K3,
        Regime::SegmentsM2Mod0Below,
        Regime::SegmentsM2Mod0Knife,
        Regime::SegmentsM2Mod0Above,
        Regime::SegmentsM2Mod1Below,
        Regime::SegmentsM2Mod1Above,
        Regime::SegmentsM2Mod2Below,
        Regime::SegmentsM2Mod2Band,
        Regime::SegmentsM2Mod2Above,
        Regime::SegmentsM2K5Small,
        Regime::SegmentsM2K5Large,
        Regime::BranchingM1Low,
        Regime::BranchingM1High,
        Regime::BranchingM2Sparse,
        Regime::BranchingM2Mixed,
        Regime::BranchingM2Dense,
        Regime::BranchingM2Saturated,
    ];

    pub fn label(&self) -> &'static str {
        use Regime::*;
        match self {
            SingleVertex => "single vertex",
            Path => "path",
            AllCubic => "boundary b=n/2-1",
            SegmentsM1Mod0 => "segments-M1/k≡0",
            SegmentsM1Mod1 => "segments-M1/k≡1",
            SegmentsM1Mod2 => "segments-M1/k≡2",
            SegmentsM2K3 => "segments-M2/k=3",
            SegmentsM2Mod0Below => "segments-M2/k≡0/n<5k/3+1",
            SegmentsM2Mod0Knife => "segments-M2/k≡0/n=5k/3+1",
            SegmentsM2Mod0Above => "segments-M2/k≡0/n>5k/3+1",
            SegmentsM2Mod1Below => "segments-M2/k≡1/n<(5k+7)/3",
            SegmentsM2Mod1Above => "segments-M2/k≡1/n>=(5k+7)/3",
            SegmentsM2Mod2Below => "segments-M2/k≡2/n<(5k-4)/3",
            SegmentsM2Mod2Band => "segments-M2/k≡2/(5k-4)/3<=n<=(5k+2)/3",
            SegmentsM2Mod2Above => "segments-M2/k≡2/n>(5k+2)/3",
            SegmentsM2K5Small => "segments-M2/k=5/n<10",
            SegmentsM2K5Large => "segments-M2/k=5/n>=10",
            BranchingM1Low => "branching-M1/b<(n-2)/3",
            BranchingM1High => "branching-M1/b>=(n-2)/3",
            BranchingM2Sparse => "branching-M2/b<=(n-4)/5",
            BranchingM2Mixed => "branching-M2/(n-4)/5<b<(n-2)/3",
            BranchingM2Dense => "branching-M2/(n-2)/3<=b<(3n-4)/7",
            BranchingM2Saturated => "branching-M2/b>=(3n-4)/7",
        }
    }

    /// The regime's closed form at `(n, p)`, ignoring its domain. `None` when
    /// a division is not exact there. `Path` and `SingleVertex` give `M2`; use
    /// [`max_value`] for `M1` on those.
    pub fn formula(&self, n: usize, p: usize) -> Option<i64> {
        use Regime::*;
        let (n, p) = (n as i64, p as i64);
        let div3 = |x: i64| (x % 3 == 0).then_some(x / 3);
        Some(match self {
            SingleVertex => 0,
            Path => 4 * n - 8,
            AllCubic => 6 * n - 15,
            SegmentsM1Mod0 => 4 * n + 2 * p - 10,
            SegmentsM1Mod1 => 4 * n + 2 * p - 8,
            SegmentsM1Mod2 => 4 * n + 2 * p - 12,
            SegmentsM2K3 => (5 * n - 11).min(4 * n - 4),
            SegmentsM2Mod0Below => 6 * n + 2 * p - 24,
            SegmentsM2Mod0Knife => div3(30 * n - 14 * p - 87)?,
            SegmentsM2Mod0Above => div3(12 * n + 16 * p - 66)?,
            SegmentsM2Mod1Below => 6 * n + 2 * p - 22,
            SegmentsM2Mod1Above => div3(12 * n + 16 * p - 52)?,
            SegmentsM2Mod2Below => 6 * n + 2 * p - 26,
            SegmentsM2Mod2Band => div3(15 * n + 11 * p - 85)?,
            SegmentsM2Mod2Above => div3(12 * n + 16 * p - 80)?,
            SegmentsM2K5Small => 5 * n - 9,
            SegmentsM2K5Large => 4 * n + 1,
            BranchingM1Low => 2 * (2 * n + 3 * p - 3),
            BranchingM1High => 2 * (4 * n - 3 * p - 7),
            BranchingM2Sparse => 4 * n + 16 * p - 12,
            BranchingM2Mixed => 6 * n + 6 * p - 20,
            BranchingM2Dense => 10 * n - 6 * p - 28,
            BranchingM2Saturated => 16 * n - 20 * p - 36,
        })
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The characterized family of trees attaining a maximum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EqualityClass {
    /// Degree sequence of `CT(n, k)` with `n3 = 0, 1, 2`.
    Ct0,
    Ct1,
    Ct2,
    /// The subclasses of `Ct*` cut out by the five structural conditions.
    CtPrime0,
    CtPrime1,
    CtPrime2,
    /// Degree sequences of `CT*(n, b)` below and above `b = (n-2)/3`.
    Bt1,
    Bt2,
    BtPrime1,
    BtPrime2,
    /// The class has one member.
    UniquePath,
    /// Every member of the class attains the value.
    Degenerate,
}

impl EqualityClass {
    pub fn label(&self) -> &'static str {
        use EqualityClass::*;
        match self {
            Ct0 => "CT0",
            Ct1 => "CT1",
            Ct2 => "CT2",
            CtPrime0 => "CT'0",
            CtPrime1 => "CT'1",
            CtPrime2 => "CT'2",
            Bt1 => "BT1",
            Bt2 => "BT2",
            BtPrime1 => "BT'1",
            BtPrime2 => "BT'2",
            UniquePath => "unique path",
            Degenerate => "degenerate",
        }
    }
}

impl fmt::Display for EqualityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoundResult {
    pub value: u64,
    pub regime: Regime,
    pub equality_class: EqualityClass,
}

/// Whether `CT(n, p)` (segments) or `CT*(n, p)` (branching) is non-empty.
pub fn feasible(family: Family, n: usize, p: usize) -> bool {
    if n == 0 {
        return false;
    }
    match family {
        Family::Segments => (p == 0 && n == 1) || (p == 1 && n >= 2) || (3 <= p && p < n),
        Family::Branching => p == 0 || (p >= 1 && 2 * p + 2 <= n),
    }
}

fn infeasible(family: Family, n: usize, p: usize) -> BoundsError {
    BoundsError::Infeasible { family, n, p }
}

fn exact_div(num: i64, den: i64) -> i64 {
    assert!(num % den == 0, "{num} is not divisible by {den}");
    num / den
}

fn count(x: i64) -> usize {
    assert!(x >= 0, "negative count {x}");
    x as usize
}

/// Degree census of any member of `CT(n, k)` with `n3` degree-3 vertices.
///
/// `n3` is an input because `k ≡ 2 n3 + 1 (mod 3)` only fixes it modulo 3.
pub fn segment_census(n: usize, k: usize, n3: usize) -> Result<DegreeCensus, BoundsError> {
    if !(3 <= k && k < n) {
        return Err(infeasible(Family::Segments, n, k));
    }
    let (ni, ki, n3i) = (n as i64, k as i64, n3 as i64);
    if (ki - 2 * n3i - 1).rem_euclid(3) != 0 {
        return Err(BoundsError::CongruenceViolation { k, n3 });
    }
    let n4 = exact_div(ki - 2 * n3i - 1, 3);
    let n1 = exact_div(2 * ki - n3i + 4, 3);
    if n4 < 0 || n1 < 0 {
        return Err(infeasible(Family::Segments, n, k));
    }
    Ok(DegreeCensus::new(n1 as usize, count(ni - ki - 1), n3, n4 as usize))
}

/// The number of degree-3 vertices of the maximizers of `CT(n, k)`.
pub fn maximizer_degree3_count(k: usize) -> usize {
    [1, 0, 2][k % 3]
}

fn path_census(n: usize) -> DegreeCensus {
    match n {
        0 | 1 => DegreeCensus::default(),
        _ => DegreeCensus::new(2, n - 2, 0, 0),
    }
}

/// Census of the maximizers over `CT*(n, b)`; the path census for `b = 0`.
pub fn branching_census(n: usize, b: usize) -> Result<DegreeCensus, BoundsError> {
    if !feasible(Family::Branching, n, b) {
        return Err(infeasible(Family::Branching, n, b));
    }
    if b == 0 {
        return Ok(path_census(n));
    }
    Ok(if 3 * b + 2 < n {
        DegreeCensus::new(2 * b + 2, n - 3 * b - 2, 0, b)
    } else {
        DegreeCensus::new(n - b, 0, 3 * b + 2 - n, n - 2 * b - 2)
    })
}

/// Census of the maximizers of either index over the class.
pub fn extremal_census(family: Family, n: usize, p: usize) -> Result<DegreeCensus, BoundsError> {
    match family {
        Family::Segments => {
            if !feasible(family, n, p) {
                return Err(infeasible(family, n, p));
            }
            if p <= 1 {
                Ok(path_census(n))
            } else {
                segment_census(n, p, maximizer_degree3_count(p))
            }
        }
        Family::Branching => branching_census(n, p),
    }
}

fn path_bound(n: usize, index: Index) -> BoundResult {
    let (value, regime) = match (n, index) {
        (1, _) => (0, Regime::SingleVertex),
        (2, Index::M1) => (2, Regime::Path),
        (2, Index::M2) => (1, Regime::Path),
        (_, Index::M1) => (4 * n as u64 - 6, Regime::Path),
        (_, Index::M2) => (4 * n as u64 - 8, Regime::Path),
    };
    BoundResult { value, regime, equality_class: EqualityClass::UniquePath }
}

/// Selects the regime for a feasible query outside the path cases.
pub fn regime(q: &ClassQuery) -> Result<Regime, BoundsError> {
    let ClassQuery { family, n, p, index } = *q;
    if !feasible(family, n, p) {
        return Err(infeasible(family, n, p));
    }
    use Regime::*;
    Ok(match family {
        Family::Segments if p <= 1 => {
            if n == 1 {
                SingleVertex
            } else {
                Path
            }
        }
        Family::Branching if p == 0 => {
            if n == 1 {
                SingleVertex
            } else {
                Path
            }
        }
        Family::Branching if 2 * p + 2 == n => AllCubic,
        Family::Segments => {
            let (k, n3) = (p, 3 * n);
            match (index, k % 3) {
                (Index::M1, 0) => SegmentsM1Mod0,
                (Index::M1, 1) => SegmentsM1Mod1,
                (Index::M1, _) => SegmentsM1Mod2,
                (Index::M2, _) if k == 3 => SegmentsM2K3,
                (Index::M2, _) if k == 5 => {
                    if n < 10 {
                        SegmentsM2K5Small
                    } else {
                        SegmentsM2K5Large
                    }
                }
                (Index::M2, 0) if n3 < 5 * k + 3 => SegmentsM2Mod0Below,
                (Index::M2, 0) if n3 == 5 * k + 3 => SegmentsM2Mod0Knife,
                (Index::M2, 0) => SegmentsM2Mod0Above,
                (Index::M2, 1) if n3 < 5 * k + 7 => SegmentsM2Mod1Below,
                (Index::M2, 1) => SegmentsM2Mod1Above,
                (Index::M2, _) if n3 + 7 <= 5 * k => SegmentsM2Mod2Below,
                (Index::M2, _) if n3 <= 5 * k + 2 => SegmentsM2Mod2Band,
                (Index::M2, _) => SegmentsM2Mod2Above,
            }
        }
        Family::Branching => {
            let b = p;
            match index {
                Index::M1 if 3 * b + 2 < n => BranchingM1Low,
                Index::M1 => BranchingM1High,
                Index::M2 if 5 * b + 4 <= n => BranchingM2Sparse,
                Index::M2 if 3 * b + 2 < n => BranchingM2Mixed,
                Index::M2 if 7 * b + 4 < 3 * n => BranchingM2Dense,
                Index::M2 => BranchingM2Saturated,
            }
        }
    })
}

/// The maximum of the index over the class, with its regime and extremal family.
pub fn max_value(q: &ClassQuery) -> Result<BoundResult, BoundsError> {
    let regime = regime(q)?;
    let ClassQuery { family, n, p, index } = *q;
    use Regime::*;
    let equality_class = match regime {
        SingleVertex | Path => return Ok(path_bound(n, index)),
        AllCubic => {
            let value = match index {
                Index::M1 => 5 * n as u64 - 8,
                Index::M2 => 6 * n as u64 - 15,
            };
            return Ok(BoundResult { value, regime, equality_class: EqualityClass::Degenerate });
        }
        SegmentsM1Mod0 => EqualityClass::Ct1,
        SegmentsM1Mod1 => EqualityClass::Ct0,
        SegmentsM1Mod2 => EqualityClass::Ct2,
        SegmentsM2K3 | SegmentsM2Mod0Below | SegmentsM2Mod0Knife | SegmentsM2Mod0Above => EqualityClass::CtPrime1,
        SegmentsM2Mod1Below | SegmentsM2Mod1Above => EqualityClass::CtPrime0,
        SegmentsM2Mod2Below | SegmentsM2Mod2Band | SegmentsM2Mod2Above | SegmentsM2K5Small | SegmentsM2K5Large => {
            EqualityClass::CtPrime2
        }
        BranchingM1Low => EqualityClass::Bt1,
        BranchingM1High => EqualityClass::Bt2,
        BranchingM2Sparse | BranchingM2Mixed => EqualityClass::BtPrime1,
        BranchingM2Dense | BranchingM2Saturated => EqualityClass::BtPrime2,
    };
    let value = regime.formula(n, p).expect("exact division inside the regime's domain");
    let value = u64::try_from(value).expect("maxima are non-negative");
    debug_assert!(family == Family::Branching || p >= 3);
    Ok(BoundResult { value, regime, equality_class })
}

/// The closed form for `M2` over `CT(n, k)`, `3 <= k < n`, exactly as stated in
/// the residue cases, without the `k = 3` correction. For `k = 3` it is 2
/// below the true maximum; [`max_value`] returns the corrected value.
pub fn stated_segments_m2(n: usize, k: usize) -> Option<u64> {
    if !(3 <= k && k < n) {
        return None;
    }
    let regime = match regime(&ClassQuery::new(Family::Segments, n, k, Index::M2)).ok()? {
        Regime::SegmentsM2K3 => {
            if 3 * n < 5 * k + 3 {
                Regime::SegmentsM2Mod0Below
            } else if 3 * n == 5 * k + 3 {
                Regime::SegmentsM2Mod0Knife
            } else {
                Regime::SegmentsM2Mod0Above
            }
        }
        r => r,
    };
    regime.formula(n, k).and_then(|v| u64::try_from(v).ok())
}

/// Edge-type counts shared by every `M2` maximizer of the class.
pub fn extremal_profile(family: Family, n: usize, p: usize) -> Result<EdgeTypeMatrix, BoundsError> {
    if !feasible(family, n, p) {
        return Err(infeasible(family, n, p));
    }
    let mut x = EdgeTypeMatrix::default();
    let (ni, pi) = (n as i64, p as i64);
    let regime = regime(&ClassQuery::new(family, n, p, Index::M2))?;
    use Regime::*;
    match regime {
        SingleVertex => {}
        Path => {
            if n == 2 {
                x.set(1, 1, 1);
            } else {
                x.set(1, 2, 2);
                x.set(2, 2, n - 3);
            }
        }
        AllCubic => {
            x.set(1, 3, n / 2 + 1);
            x.set(3, 3, n / 2 - 2);
        }
        SegmentsM2K3 => {
            let long_legs = 3.min(n - 4);
            x.set(1, 3, 3 - long_legs);
            x.set(2, 3, long_legs);
            x.set(1, 2, long_legs);
            x.set(2, 2, n - 4 - long_legs);
        }
        SegmentsM2K5Small => {
            x.set(3, 3, 1);
            x.set(2, 3, n - 6);
            x.set(1, 3, 10 - n);
            x.set(1, 2, n - 6);
        }
        SegmentsM2K5Large => {
            x.set(3, 3, 1);
            x.set(2, 3, 4);
            x.set(1, 2, 4);
            x.set(2, 2, n - 10);
        }
        SegmentsM2Mod1Below | SegmentsM2Mod1Above => {
            x.set(4, 4, count(exact_div(pi - 4, 3)));
            if regime == SegmentsM2Mod1Below {
                x.set(1, 2, count(ni - pi - 1));
                x.set(2, 4, count(ni - pi - 1));
                x.set(1, 4, count(exact_div(5 * pi - 3 * ni + 7, 3)));
            } else {
                let legs = count(exact_div(2 * pi + 4, 3));
                x.set(1, 2, legs);
                x.set(2, 4, legs);
                x.set(2, 2, count(exact_div(3 * ni - 5 * pi - 7, 3)));
            }
        }
        SegmentsM2Mod0Below | SegmentsM2Mod0Knife | SegmentsM2Mod0Above => {
            x.set(4, 4, count(exact_div(pi - 6, 3)));
            x.set(3, 4, 1);
            match regime {
                SegmentsM2Mod0Below => {
                    x.set(1, 2, count(ni - pi - 1));
                    x.set(2, 4, count(ni - pi - 1));
                    x.set(1, 3, 2);
                    x.set(1, 4, count(exact_div(5 * pi - 3 * ni, 3)));
                }
                SegmentsM2Mod0Knife => {
                    x.set(1, 2, count(ni - pi - 1));
                    x.set(1, 3, 1);
                    x.set(2, 3, 1);
                    x.set(2, 4, count(ni - pi - 2));
                }
                _ => {
                    x.set(1, 2, count(exact_div(2 * pi + 3, 3)));
                    x.set(2, 2, count(exact_div(3 * ni - 5 * pi - 6, 3)));
                    x.set(2, 3, 2);
                    x.set(2, 4, count(exact_div(2 * pi - 3, 3)));
                }
            }
        }
        SegmentsM2Mod2Below | SegmentsM2Mod2Band | SegmentsM2Mod2Above => {
            x.set(4, 4, count(exact_div(pi - 8, 3)));
            x.set(3, 4, 2);
            match regime {
                SegmentsM2Mod2Below => {
                    x.set(1, 2, count(ni - pi - 1));
                    x.set(2, 4, count(ni - pi - 1));
                    x.set(1, 3, 4);
                    x.set(1, 4, count(exact_div(5 * pi - 3 * ni - 7, 3)));
                }
                SegmentsM2Mod2Band => {
                    x.set(1, 2, count(ni - pi - 1));
                    x.set(2, 3, count(exact_div(3 * ni - 5 * pi + 7, 3)));
                    x.set(2, 4, count(2 * exact_div(pi - 5, 3)));
                    x.set(1, 3, count(exact_div(5 * pi - 3 * ni + 5, 3)));
                }
                _ => {
                    x.set(1, 2, count(exact_div(2 * pi + 2, 3)));
                    x.set(2, 2, count(exact_div(3 * ni - 5 * pi - 5, 3)));
                    x.set(2, 3, 4);
                    x.set(2, 4, count(2 * exact_div(pi - 5, 3)));
                }
            }
        }
        BranchingM2Sparse => {
            x.set(4, 4, p - 1);
            x.set(1, 2, 2 * p + 2);
            x.set(2, 4, 2 * p + 2);
            x.set(2, 2, count(ni - 5 * pi - 4));
        }
        BranchingM2Mixed => {
            x.set(4, 4, p - 1);
            x.set(1, 2, count(ni - 3 * pi - 2));
            x.set(2, 4, count(ni - 3 * pi - 2));
            x.set(1, 4, count(5 * pi - ni + 4));
        }
        BranchingM2Dense => {
            x.set(4, 4, count(ni - 2 * pi - 3));
            x.set(1, 4, count(3 * ni - 7 * pi - 4));
            x.set(1, 3, count(6 * pi - 2 * ni + 4));
            x.set(3, 4, count(3 * pi - ni + 2));
        }
        BranchingM2Saturated => {
            x.set(4, 4, count(ni - 2 * pi - 3));
            x.set(1, 3, count(ni - pi));
            x.set(3, 4, count(2 * ni - 4 * pi - 2));
            x.set(3, 3, count(7 * pi - 3 * ni + 4));
        }
        SegmentsM1Mod0 | SegmentsM1Mod1 | SegmentsM1Mod2 | BranchingM1Low | BranchingM1High => {
            unreachable!("M2 query selects an M2 regime")
        }
    }
    Ok(x)
}
