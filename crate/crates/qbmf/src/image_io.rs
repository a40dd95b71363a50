//! 8-bit raster images and the binary netpbm (PGM/PPM) codec.
//!
//! Only binary `P5` (grayscale) and `P6` (RGB) files with maxval 255 are
//! accepted: that is exactly the lossless byte-per-sample representation
//! the rest of the pipeline operates on. Pixels are row-major with the
//! origin at the top-left.

use std::fs;
use std::io::{self, Read};
use std::path::Path;

use crate::error::{Error, Result};

/// Single-channel 8-bit image, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayImage {
    rows: usize,
    cols: usize,
    pixels: Vec<u8>,
}

impl GrayImage {
    pub fn new(rows: usize, cols: usize, pixels: Vec<u8>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Domain(format!("image dimensions must be >= 1, got {rows}x{cols}")));
        }
        if pixels.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "pixel buffer has {} samples, expected {}",
                pixels.len(),
                rows * cols
            )));
        }
        Ok(GrayImage { rows, cols, pixels })
    }

    pub fn filled(rows: usize, cols: usize, value: u8) -> Self {
        GrayImage::new(rows, cols, vec![value; rows * cols]).expect("dimensions >= 1")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.pixels[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: u8) {
        self.pixels[r * self.cols + c] = value;
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn same_shape(&self, other: &GrayImage) -> bool {
        self.rows == other.rows && self.cols == other.cols
    }
}

/// Three-channel 8-bit RGB image; all channels share dimensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorImage {
    pub red: GrayImage,
    pub green: GrayImage,
    pub blue: GrayImage,
}

impl ColorImage {
    pub fn new(red: GrayImage, green: GrayImage, blue: GrayImage) -> Result<Self> {
        if !red.same_shape(&green) || !red.same_shape(&blue) {
            return Err(Error::ShapeMismatch(format!(
                "channels differ: red {}x{}, green {}x{}, blue {}x{}",
                red.rows, red.cols, green.rows, green.cols, blue.rows, blue.cols
            )));
        }
        Ok(ColorImage { red, green, blue })
    }

    pub fn rows(&self) -> usize {
        self.red.rows
    }

    pub fn cols(&self) -> usize {
        self.red.cols
    }

    pub fn channels(&self) -> [&GrayImage; 3] {
        [&self.red, &self.green, &self.blue]
    }

    pub fn channel(&self, ch: Channel) -> &GrayImage {
        match ch {
            Channel::Red => &self.red,
            Channel::Green => &self.green,
            Channel::Blue => &self.blue,
        }
    }
}

/// One of the three RGB color components.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Channel {
    Red,
    Green,
    Blue,
}

impl Channel {
    pub const ALL: [Channel; 3] = [Channel::Red, Channel::Green, Channel::Blue];

    pub fn index(self) -> usize {
        match self {
            Channel::Red => 0,
            Channel::Green => 1,
            Channel::Blue => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Channel::Red => "red",
            Channel::Green => "green",
            Channel::Blue => "blue",
        }
    }
}

/// Either flavour of image the codec can hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Image {
    Gray(GrayImage),
    Color(ColorImage),
}

impl Image {
    pub fn rows(&self) -> usize {
        match self {
            Image::Gray(g) => g.rows(),
            Image::Color(c) => c.rows(),
        }
    }

    pub fn cols(&self) -> usize {
        match self {
            Image::Gray(g) => g.cols(),
            Image::Color(c) => c.cols(),
        }
    }

    pub fn channel_count(&self) -> usize {
        match self {
            Image::Gray(_) => 1,
            Image::Color(_) => 3,
        }
    }
}

impl From<GrayImage> for Image {
    fn from(g: GrayImage) -> Self {
        Image::Gray(g)
    }
}

impl From<ColorImage> for Image {
    fn from(c: ColorImage) -> Self {
        Image::Color(c)
    }
}

/// Splits a color image into its (red, green, blue) components.
pub fn split_channels(img: &ColorImage) -> (GrayImage, GrayImage, GrayImage) {
    (img.red.clone(), img.green.clone(), img.blue.clone())
}

/// Recomposes a color image from its components; inverse of [`split_channels`].
pub fn merge_channels(red: GrayImage, green: GrayImage, blue: GrayImage) -> Result<ColorImage> {
    ColorImage::new(red, green, blue)
}

// --- netpbm codec ---

struct HeaderReader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> HeaderReader<'a> {
    fn new(bytes: &'a [u8]) -> Self {
        HeaderReader { bytes, pos: 0 }
    }

    /// Next whitespace-delimited token, skipping `#` comment lines.
    fn token(&mut self) -> Result<&'a [u8]> {
        loop {
            while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
                self.pos += 1;
            }
            if self.pos >= self.bytes.len() {
                return Err(Error::Format("unexpected end of header".into()));
            }
            if self.bytes[self.pos] == b'#' {
                while self.pos < self.bytes.len() && self.bytes[self.pos] != b'\n' {
                    self.pos += 1;
                }
                continue;
            }
            let start = self.pos;
            while self.pos < self.bytes.len() && !self.bytes[self.pos].is_ascii_whitespace() {
                self.pos += 1;
            }
            return Ok(&self.bytes[start..self.pos]);
        }
    }

    fn number(&mut self, what: &str) -> Result<usize> {
        let tok = self.token()?;
        std::str::from_utf8(tok)
            .ok()
            .and_then(|s| s.parse::<usize>().ok())
            .ok_or_else(|| Error::Format(format!("invalid {what} field")))
    }

    /// Consume the single whitespace byte that separates header and payload.
    fn payload(mut self) -> Result<&'a [u8]> {
        if self.pos >= self.bytes.len() || !self.bytes[self.pos].is_ascii_whitespace() {
            return Err(Error::Format("missing separator before pixel data".into()));
        }
        self.pos += 1;
        Ok(&self.bytes[self.pos..])
    }
}

/// Decodes a binary PGM (`P5`) or PPM (`P6`) byte buffer.
pub fn decode(bytes: &[u8]) -> Result<Image> {
    let mut header = HeaderReader::new(bytes);
    let magic = header.token()?;
    let channels = match magic {
        b"P5" => 1,
        b"P6" => 3,
        other => {
            return Err(Error::Format(format!(
                "unsupported magic {:?} (expected P5 or P6)",
                String::from_utf8_lossy(other)
            )))
        }
    };
    let cols = header.number("width")?;
    let rows = header.number("height")?;
    if rows == 0 || cols == 0 {
        return Err(Error::Format(format!("zero image dimension {cols}x{rows}")));
    }
    let maxval = header.number("maxval")?;
    if maxval != 255 {
        return Err(Error::UnsupportedMaxval(maxval as u32));
    }
    let payload = header.payload()?;
    let expected = rows * cols * channels;
    if payload.len() < expected {
        return Err(Error::Io(io::Error::new(
            io::ErrorKind::UnexpectedEof,
            format!("payload has {} bytes, expected {expected}", payload.len()),
        )));
    }
    let payload = &payload[..expected];
    if channels == 1 {
        Ok(Image::Gray(GrayImage::new(rows, cols, payload.to_vec())?))
    } else {
        let n = rows * cols;
        let mut red = Vec::with_capacity(n);
        let mut green = Vec::with_capacity(n);
        let mut blue = Vec::with_capacity(n);
        for px in payload.chunks_exact(3) {
            red.push(px[0]);
            green.push(px[1]);
            blue.push(px[2]);
        }
        Ok(Image::Color(ColorImage::new(
            GrayImage::new(rows, cols, red)?,
            GrayImage::new(rows, cols, green)?,
            GrayImage::new(rows, cols, blue)?,
        )?))
    }
}

/// Encodes an image as binary PGM/PPM with maxval 255.
pub fn encode(img: &Image) -> Vec<u8> {
    match img {
        Image::Gray(g) => {
            let mut out = format!("P5\n{} {}\n255\n", g.cols(), g.rows()).into_bytes();
            out.extend_from_slice(g.pixels());
            out
        }
        Image::Color(c) => {
            let mut out = format!("P6\n{} {}\n255\n", c.cols(), c.rows()).into_bytes();
            for i in 0..c.rows() * c.cols() {
                out.push(c.red.pixels()[i]);
                out.push(c.green.pixels()[i]);
                out.push(c.blue.pixels()[i]);
            }
            out
        }
    }
}

/// Reads a PGM/PPM file; `P5` yields `Image::Gray`, `P6` yields `Image::Color`.
pub fn read_image<P: AsRef<Path>>(path: P) -> Result<Image> {
    let mut bytes = Vec::new();
    fs::File::open(path)?.read_to_end(&mut bytes)?;
    decode(&bytes)
}

/// Writes an image as binary PGM (gray) or PPM (color).
pub fn write_image<P: AsRef<Path>>(img: &Image, path: P) -> Result<()> {
    fs::write(path, encode(img))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decode_p5_basic() {
        let bytes = b"P5 2 2 255 \x00\xff\x80\x40";
        let img = decode(bytes).unwrap();
        match img {
            Image::Gray(g) => {
                assert_eq!((g.rows(), g.cols()), (2, 2));
                assert_eq!(g.pixels(), &[0, 255, 128, 64]);
            }
            _ => panic!("expected gray"),
        }
    }

    #[test]
    fn decode_p6_channel_order() {
        let bytes = b"P6\n2 1\n255\n\xff\x00\x00\x00\x00\xff";
        match decode(bytes).unwrap() {
            Image::Color(c) => {
                assert_eq!(c.red.pixels(), &[255, 0]);
                assert_eq!(c.green.pixels(), &[0, 0]);
                assert_eq!(c.blue.pixels(), &[0, 255]);
            }
            _ => panic!("expected color"),
        }
    }

    #[test]
    fn decode_rejects_p4_magic() {
        let err = decode(b"P4\n2 2\n\x00").unwrap_err();
        assert!(matches!(err, Error::Format(_)), "got {err:?}");
    }

    #[test]
    fn decode_rejects_maxval_other_than_255() {
        let err = decode(b"P5 1 1 65535 \x00\x00").unwrap_err();
        assert!(matches!(err, Error::UnsupportedMaxval(65535)), "got {err:?}");
    }

    #[test]
    fn decode_rejects_truncated_payload() {
        let err = decode(b"P5 2 2 255 \x00\x01").unwrap_err();
        assert!(matches!(err, Error::Io(_)), "got {err:?}");
    }

    #[test]
    fn decode_rejects_garbage_header() {
        assert!(matches!(decode(b"P5 x 2 255 \x00").unwrap_err(), Error::Format(_)));
        assert!(matches!(decode(b"P5 2").unwrap_err(), Error::Format(_)));
        assert!(matches!(decode(b"P5 0 3 255 ").unwrap_err(), Error::Format(_)));
    }

    #[test]
    fn decode_tolerates_comment_after_magic() {
        let bytes = b"P5\n# made by hand\n1 1\n255\n\x07";
        match decode(bytes).unwrap() {
            Image::Gray(g) => assert_eq!(g.pixels(), &[7]),
            _ => panic!("expected gray"),
        }
    }

    #[test]
    fn encode_has_no_comment() {
        let g = GrayImage::new(1, 1, vec![7]).unwrap();
        let bytes = encode(&Image::Gray(g));
        assert_eq!(&bytes, b"P5\n1 1\n255\n\x07");
    }

    #[test]
    fn gray_round_trip_exact() {
        let g = GrayImage::new(3, 3, vec![0; 9]).unwrap();
        let img = Image::Gray(g);
        assert_eq!(decode(&encode(&img)).unwrap(), img);
    }

    #[test]
    fn split_merge_identity() {
        let r = GrayImage::new(1, 1, vec![10]).unwrap();
        let g = GrayImage::new(1, 1, vec![20]).unwrap();
        let b = GrayImage::new(1, 1, vec![30]).unwrap();
        let img = ColorImage::new(r, g, b).unwrap();
        let (sr, sg, sb) = split_channels(&img);
        assert_eq!(sr.pixels(), &[10]);
        assert_eq!(sg.pixels(), &[20]);
        assert_eq!(sb.pixels(), &[30]);
        assert_eq!(merge_channels(sr, sg, sb).unwrap(), img);
    }

    #[test]
    fn merge_rejects_mismatched_shapes() {
        let a = GrayImage::filled(2, 2, 0);
        let b = GrayImage::filled(2, 3, 0);
        let err = merge_channels(a.clone(), b, a).unwrap_err();
        assert!(matches!(err, Error::ShapeMismatch(_)));
    }

    #[test]
    fn grayscale_content_splits_into_identical_channels() {
        let ch = GrayImage::new(2, 2, vec![9, 8, 7, 6]).unwrap();
        let img = ColorImage::new(ch.clone(), ch.clone(), ch.clone()).unwrap();
        let (r, g, b) = split_channels(&img);
        assert_eq!(r, g);
        assert_eq!(g, b);
    }
}
