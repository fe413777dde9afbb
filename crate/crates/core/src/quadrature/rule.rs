use std::cmp::Ordering;
use std::ops::{Add, Mul, Sub};

use crate::error::Result;
use crate::Complex;

/// Values the integrator can accumulate.
pub trait QuadValue: Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> {
    fn zero() -> Self;
    /// Norm used for error control.
    fn magnitude(&self) -> f64;
    fn is_finite_value(&self) -> bool;
}

impl QuadValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
    fn is_finite_value(&self) -> bool {
        self.is_finite()
    }
}

impl QuadValue for Complex {
    fn zero() -> Self {
        Complex::new(0.0, 0.0)
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn is_finite_value(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

/// An inner integral carried through the outer rule together with its
/// error estimate, so the outer pass also integrates the inner error.
#[derive(Debug, Clone, Copy)]
pub(crate) struct WithError<V> {
    pub value: V,
    pub error: f64,
}

impl<V: QuadValue> Add for WithError<V> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self {
            value: self.value + o.value,
            error: self.error + o.error,
        }
    }
}

impl<V: QuadValue> Sub for WithError<V> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self {
            value: self.value - o.value,
            error: self.error - o.error,
        }
    }
}

impl<V: QuadValue> Mul<f64> for WithError<V> {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self {
            value: self.value * s,
            error: self.error * s.abs(),
        }
    }
}

impl<V: QuadValue> QuadValue for WithError<V> {
    fn zero() -> Self {
        Self {
            value: V::zero(),
            error: 0.0,
        }
    }
    fn magnitude(&self) -> f64 {
        self.value.magnitude()
    }
    fn is_finite_value(&self) -> bool {
        self.value.is_finite_value() && self.error.is_finite()
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Segment<V> {
    pub a: f64,
    pub b: f64,
    pub value: V,
    pub error: f64,
}

impl<V> PartialEq for Segment<V> {
    fn eq(&self, o: &Self) -> bool {
        self.error.total_cmp(&o.error) == Ordering::Equal
    }
}

impl<V> Eq for Segment<V> {}

impl<V> PartialOrd for Segment<V> {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl<V> Ord for Segment<V> {
    fn cmp(&self, o: &Self) -> Ordering {
        self.error.total_cmp(&o.error)
    }
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// Gauss weights for the odd Kronrod nodes 1, 3, 5 and the centre.
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// 15-point Kronrod estimate with the usual QUADPACK error heuristic.
pub(crate) fn gk15<V, F>(f: &mut F, a: f64, b: f64) -> Result<Segment<V>>
where
    V: QuadValue,
    F: FnMut(f64) -> Result<V>,
{
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(centre)?;
    let mut resg = fc * WG[3];
    let mut resk = fc * WGK[7];
    let mut resabs = WGK[7] * fc.magnitude();
    let mut fv1 = [V::zero(); 7];
    let mut fv2 = [V::zero(); 7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(centre - dx)?;
        let f2 = f(centre + dx)?;
        fv1[j] = f1;
        fv2[j] = f2;
        resk = resk + (f1 + f2) * WGK[j];
        resabs += WGK[j] * (f1.magnitude() + f2.magnitude());
        if j % 2 == 1 {
            resg = resg + (f1 + f2) * WG[j / 2];
        }
    }
    let mean = resk * 0.5;
    let mut resasc = WGK[7] * (fc - mean).magnitude();
    for j in 0..7 {
        resasc += WGK[j] * ((fv1[j] - mean).magnitude() + (fv2[j] - mean).magnitude());
    }
    let scale = half.abs();
    let value = resk * half;
    resabs *= scale;
    resasc *= scale;
    let mut error = ((resk - resg) * half).magnitude();
    if resasc != 0.0 && error != 0.0 {
        error = resasc * (200.0 * error / resasc).powf(1.5).min(1.0);
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * resabs);
    }
    Ok(Segment { a, b, value, error })
}
