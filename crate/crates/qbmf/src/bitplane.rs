//! Bit slicing of 8-bit channels into bitplanes and exact reassembly.
//!
//! A channel of depth `bpp` splits into `bpp` binary planes; plane index
//! `bpp - 1` is the most significant bit (MSB), index 0 the least. Slicing
//! and reassembly are exact inverses over the full sample range.

use crate::error::{Error, Result};
use crate::image_io::GrayImage;

/// Binary matrix holding one bit position of one channel. Values are 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bitplane {
    rows: usize,
    cols: usize,
    bits: Vec<u8>,
}

impl Bitplane {
    pub fn new(rows: usize, cols: usize, bits: Vec<u8>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Domain(format!("plane dimensions must be >= 1, got {rows}x{cols}")));
        }
        if bits.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "bit buffer has {} entries, expected {}",
                bits.len(),
                rows * cols
            )));
        }
        if let Some(bad) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::Domain(format!("bitplane element {bad} is not 0 or 1")));
        }
        Ok(Bitplane { rows, cols, bits })
    }

    pub fn filled(rows: usize, cols: usize, bit: u8) -> Result<Self> {
        Bitplane::new(rows, cols, vec![bit; rows * cols])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.bits[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, bit: u8) {
        debug_assert!(bit <= 1);
        self.bits[r * self.cols + c] = bit;
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn same_shape(&self, other: &Bitplane) -> bool {
        self.rows == other.rows && self.cols == other.cols
    }

    /// Renders the plane for visual inspection: 0 -> black, 1 -> white.
    pub fn to_image(&self) -> GrayImage {
        let pixels = self.bits.iter().map(|&b| if b == 1 { 255 } else { 0 }).collect();
        GrayImage::new(self.rows, self.cols, pixels).expect("plane dims valid")
    }

    /// Thresholds a rendering back into a plane: >127 -> 1, else 0.
    pub fn from_image(img: &GrayImage) -> Bitplane {
        let bits = img.pixels().iter().map(|&p| u8::from(p > 127)).collect();
        Bitplane::new(img.rows(), img.cols(), bits).expect("image dims valid")
    }
}

/// Ordered set of `bpp` planes for one channel; index `bpp - 1` is the MSB.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitplaneStack {
    bpp: u32,
    rows: usize,
    cols: usize,
    planes: Vec<Bitplane>,
}

impl BitplaneStack {
    pub fn new(planes: Vec<Bitplane>) -> Result<Self> {
        if planes.is_empty() || planes.len() > 8 {
            return Err(Error::Domain(format!("bit depth must be 1..=8, got {}", planes.len())));
        }
        let (rows, cols) = (planes[0].rows(), planes[0].cols());
        if planes.iter().any(|p| p.rows() != rows || p.cols() != cols) {
            return Err(Error::ShapeMismatch("planes in a stack must share dimensions".into()));
        }
        Ok(BitplaneStack { bpp: planes.len() as u32, rows, cols, planes })
    }

    pub fn bpp(&self) -> u32 {
        self.bpp
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Plane for bit position `b` (0 = LSB).
    pub fn plane(&self, b: usize) -> &Bitplane {
        &self.planes[b]
    }

    pub fn planes(&self) -> &[Bitplane] {
        &self.planes
    }
}

fn check_bpp(bpp: u32) -> Result<()> {
    if !(1..=8).contains(&bpp) {
        return Err(Error::Domain(format!("bit depth must be 1..=8, got {bpp}")));
    }
    Ok(())
}

/// Expands a sample into its bits, most significant first.
pub fn pixel_to_bits(p: u8, bpp: u32) -> Result<Vec<u8>> {
    check_bpp(bpp)?;
    if bpp < 8 && u32::from(p) >= (1 << bpp) {
        return Err(Error::Domain(format!("sample {p} does not fit in {bpp} bits")));
    }
    Ok((0..bpp).rev().map(|b| (p >> b) & 1).collect())
}

/// Collapses an MSB-first bit vector back into a sample; inverse of
/// [`pixel_to_bits`].
pub fn bits_to_pixel(bits: &[u8]) -> Result<u8> {
    check_bpp(bits.len() as u32)?;
    let mut p: u32 = 0;
    for &b in bits {
        if b > 1 {
            return Err(Error::Domain(format!("bit value {b} is not 0 or 1")));
        }
        p = (p << 1) | u32::from(b);
    }
    Ok(p as u8)
}

/// Slices a channel into `bpp` bitplanes.
pub fn slice(ch: &GrayImage, bpp: u32) -> Result<BitplaneStack> {
    check_bpp(bpp)?;
    if bpp < 8 {
        if let Some(&bad) = ch.pixels().iter().find(|&&p| u32::from(p) >= (1 << bpp)) {
            return Err(Error::Domain(format!("sample {bad} does not fit in {bpp} bits")));
        }
    }
    let planes = (0..bpp)
        .map(|b| {
            let bits = ch.pixels().iter().map(|&p| (p >> b) & 1).collect();
            Bitplane::new(ch.rows(), ch.cols(), bits)
        })
        .collect::<Result<Vec<_>>>()?;
    BitplaneStack::new(planes)
}

/// Recomposes a channel from its bitplanes; exact inverse of [`slice`].
pub fn reassemble(stack: &BitplaneStack) -> GrayImage {
    let n = stack.rows() * stack.cols();
    let mut pixels = vec![0u8; n];
    for (b, plane) in stack.planes().iter().enumerate() {
        for (px, &bit) in pixels.iter_mut().zip(plane.bits()) {
            *px |= bit << b;
        }
    }
    GrayImage::new(stack.rows(), stack.cols(), pixels).expect("stack dims valid")
}

/// The most significant plane of a stack.
pub fn extract_msb(stack: &BitplaneStack) -> &Bitplane {
    stack.plane(stack.bpp() as usize - 1)
}

/// New stack with the MSB plane replaced; all other planes untouched.
pub fn replace_msb(stack: &BitplaneStack, plane: Bitplane) -> Result<BitplaneStack> {
    if plane.rows() != stack.rows() || plane.cols() != stack.cols() {
        return Err(Error::ShapeMismatch(format!(
            "replacement plane is {}x{}, stack is {}x{}",
            plane.rows(),
            plane.cols(),
            stack.rows(),
            stack.cols()
        )));
    }
    let mut planes = stack.planes().to_vec();
    *planes.last_mut().expect("stack non-empty") = plane;
    BitplaneStack::new(planes)
}

/// Flips every bit; an involution.
pub fn invert_plane(p: &Bitplane) -> Bitplane {
    let bits = p.bits().iter().map(|&b| 1 - b).collect();
    Bitplane::new(p.rows(), p.cols(), bits).expect("plane dims valid")
}
