//! Published parameter tables: the quantum codes `[[n, k, >= δ]]_q` listed for this family,
//! and the codes from other constructions printed beside them.

use serde::Serialize;

/// Which listing a published row belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Listing {
    /// `m = 2`, `q >= 5`, design distances from the second threshold up.
    ShortLargeQ,
    /// `m = 4`, `q in {5, 7}`.
    Long,
    /// Every code of length below 1000.
    BelowThousand,
}

/// A listed `[[n, k, >= δ]]_q` code of this family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PublishedRow {
    pub listing: Listing,
    pub q: u64,
    pub m: u32,
    pub delta: u64,
    pub n: u64,
    pub k: u64,
}

/// Construction a comparison code comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// Narrow-sense constacyclic BCH codes of the same length with a lower-bound dimension formula.
    PriorConstacyclic,
    NonNarrowSense,
    TwistedTable,
    NarrowSenseBch,
}

impl Source {
    pub fn label(self) -> &'static str {
        match self {
            Self::PriorConstacyclic => "prior constacyclic BCH",
            Self::NonNarrowSense => "non-narrow-sense constacyclic",
            Self::TwistedTable => "twisted codes",
            Self::NarrowSenseBch => "narrow-sense BCH",
        }
    }
}

/// A code from another construction, listed next to the row `(q, m, delta)` of this family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub q: u64,
    pub m: u32,
    pub delta: u64,
    pub source: Source,
    pub code: &'static str,
}

const fn row(listing: Listing, q: u64, m: u32, delta: u64, n: u64, k: u64) -> PublishedRow {
    PublishedRow {
        listing,
        q,
        m,
        delta,
        n,
        k,
    }
}

use Listing::{BelowThousand as B, Long as L, ShortLargeQ as S};

pub const PUBLISHED: &[PublishedRow] = &[
    row(S, 5, 2, 19, 104, 40),
    row(S, 7, 2, 33, 300, 180),
    row(S, 7, 2, 34, 300, 176),
    row(S, 7, 2, 35, 300, 172),
    row(S, 7, 2, 36, 300, 168),
    row(S, 7, 2, 37, 300, 164),
    row(S, 7, 2, 39, 300, 160),
    row(S, 8, 2, 45, 455, 289),
    row(S, 8, 2, 46, 455, 285),
    row(S, 8, 2, 47, 455, 281),
    row(S, 8, 2, 48, 455, 277),
    row(S, 8, 2, 49, 455, 273),
    row(S, 8, 2, 50, 455, 269),
    row(S, 8, 2, 52, 455, 265),
    row(S, 9, 2, 51, 656, 464),
    row(S, 9, 2, 52, 656, 460),
    row(S, 9, 2, 53, 656, 456),
    row(S, 9, 2, 54, 656, 452),
    row(S, 9, 2, 55, 656, 448),
    row(S, 9, 2, 56, 656, 444),
    row(S, 9, 2, 57, 656, 440),
    row(S, 9, 2, 58, 656, 436),
    row(S, 9, 2, 59, 656, 436),
    row(S, 9, 2, 60, 656, 432),
    row(S, 9, 2, 61, 656, 428),
    row(S, 9, 2, 62, 656, 424),
    row(S, 9, 2, 63, 656, 420),
    row(S, 9, 2, 64, 656, 416),
    row(S, 9, 2, 65, 656, 412),
    row(S, 9, 2, 67, 656, 408),
    row(L, 5, 4, 419, 65104, 61904),
    row(L, 5, 4, 420, 65104, 61896),
    row(L, 5, 4, 518, 65104, 61144),
    row(L, 7, 4, 1503, 720600, 708840),
    row(L, 7, 4, 1504, 720600, 708832),
    row(L, 7, 4, 2096, 720600, 704200),
    row(B, 2, 2, 3, 5, 1),
    row(B, 3, 2, 4, 20, 12),
    row(B, 3, 2, 5, 20, 8),
    row(B, 4, 2, 5, 51, 39),
    row(B, 4, 2, 6, 51, 35),
    row(B, 4, 2, 7, 51, 31),
    row(B, 2, 4, 3, 85, 77),
    row(B, 2, 4, 4, 85, 69),
    row(B, 2, 4, 5, 85, 61),
    row(B, 2, 4, 7, 85, 53),
    row(B, 2, 4, 11, 85, 29),
    row(B, 5, 2, 6, 104, 88),
    row(B, 5, 2, 7, 104, 84),
    row(B, 5, 2, 8, 104, 80),
    row(B, 5, 2, 9, 104, 76),
    row(B, 5, 2, 19, 104, 40),
    row(B, 7, 2, 8, 300, 276),
    row(B, 7, 2, 9, 300, 272),
    row(B, 7, 2, 10, 300, 268),
    row(B, 7, 2, 11, 300, 264),
    row(B, 7, 2, 12, 300, 260),
    row(B, 7, 2, 13, 300, 256),
    row(B, 7, 2, 39, 300, 160),
    row(B, 8, 2, 9, 455, 427),
    row(B, 8, 2, 10, 455, 423),
    row(B, 8, 2, 11, 455, 419),
    row(B, 8, 2, 12, 455, 415),
    row(B, 8, 2, 13, 455, 411),
    row(B, 8, 2, 14, 455, 407),
    row(B, 8, 2, 15, 455, 403),
    row(B, 8, 2, 52, 455, 265),
    row(B, 9, 2, 10, 656, 624),
    row(B, 9, 2, 11, 656, 620),
    row(B, 9, 2, 12, 656, 616),
    row(B, 9, 2, 13, 656, 612),
    row(B, 9, 2, 14, 656, 608),
    row(B, 9, 2, 15, 656, 604),
    row(B, 9, 2, 16, 656, 600),
    row(B, 9, 2, 17, 656, 596),
    row(B, 9, 2, 67, 656, 408),
];

const fn cmp(q: u64, m: u32, delta: u64, source: Source, code: &'static str) -> Comparison {
    Comparison {
        q,
        m,
        delta,
        source,
        code,
    }
}

use Source::{NarrowSenseBch as Nb, NonNarrowSense as Nn, PriorConstacyclic as Pc, TwistedTable as Tw};

pub const COMPARISONS: &[Comparison] = &[
    cmp(5, 2, 19, Pc, "[[104,40,≥18]]_5"),
    cmp(7, 2, 33, Pc, "[[300,176,≥33]]_7"),
    cmp(7, 2, 34, Pc, "[[300,172,≥34]]_7"),
    cmp(7, 2, 35, Pc, "[[300,168,≥35]]_7"),
    cmp(7, 2, 36, Pc, "[[300,164,≥36]]_7"),
    cmp(7, 2, 37, Pc, "[[300,160,≥37]]_7"),
    cmp(7, 2, 39, Pc, "[[300,156,≥38]]_7"),
    cmp(8, 2, 45, Pc, "[[455,285,≥45]]_8"),
    cmp(8, 2, 46, Pc, "[[455,281,≥46]]_8"),
    cmp(8, 2, 47, Pc, "[[455,277,≥47]]_8"),
    cmp(8, 2, 48, Pc, "[[455,273,≥48]]_8"),
    cmp(8, 2, 49, Pc, "[[455,269,≥49]]_8"),
    cmp(8, 2, 50, Pc, "[[455,265,≥50]]_8"),
    cmp(8, 2, 52, Pc, "[[455,261,≥51]]_8"),
    cmp(9, 2, 51, Pc, "[[656,460,≥51]]_9"),
    cmp(9, 2, 52, Pc, "[[656,456,≥52]]_9"),
    cmp(9, 2, 53, Pc, "[[656,452,≥53]]_9"),
    cmp(9, 2, 54, Pc, "[[656,448,≥54]]_9"),
    cmp(9, 2, 55, Pc, "[[656,444,≥55]]_9"),
    cmp(9, 2, 56, Pc, "[[656,440,≥56]]_9"),
    cmp(9, 2, 57, Pc, "[[656,436,≥57]]_9"),
    cmp(9, 2, 58, Pc, "[[656,432,≥58]]_9"),
    cmp(9, 2, 59, Pc, "[[656,428,≥59]]_9"),
    cmp(9, 2, 60, Pc, "[[656,424,≥60]]_9"),
    cmp(9, 2, 61, Pc, "[[656,420,≥61]]_9"),
    cmp(9, 2, 62, Pc, "[[656,416,≥62]]_9"),
    cmp(9, 2, 63, Pc, "[[656,412,≥63]]_9"),
    cmp(9, 2, 64, Pc, "[[656,408,≥64]]_9"),
    cmp(9, 2, 65, Pc, "[[656,404,≥65]]_9"),
    cmp(9, 2, 67, Pc, "[[656,400,≥66]]_9"),
    cmp(5, 4, 419, Pc, "[[65104,61896,≥419]]_5"),
    cmp(5, 4, 420, Pc, "[[65104,61888,≥420]]_5"),
    cmp(5, 4, 518, Pc, "[[65104,61136,≥518]]_5"),
    cmp(7, 4, 1503, Pc, "[[720600,708832,≥1503]]_7"),
    cmp(7, 4, 1504, Pc, "[[720600,708824,≥1504]]_7"),
    cmp(7, 4, 2096, Pc, "[[720600,704184,≥2096]]_7"),
    cmp(3, 2, 4, Nn, "[[20,10,≥4]]_3"),
    cmp(3, 2, 4, Tw, "[[20,12,3]]_3"),
    cmp(4, 2, 5, Nn, "[[51,37,≥5]]_4"),
    cmp(4, 2, 5, Tw, "[[51,39,5]]_4"),
    cmp(4, 2, 6, Nn, "[[51,33,≥6]]_4"),
    cmp(4, 2, 6, Tw, "[[51,35,6]]_4"),
    cmp(4, 2, 7, Tw, "[[51,31,7]]_4"),
    cmp(2, 4, 3, Tw, "[[85,77,3]]_2"),
    cmp(2, 4, 3, Nb, "[[85,77,≥2]]_2"),
    cmp(2, 4, 4, Tw, "[[85,69,4]]_2"),
    cmp(2, 4, 4, Nb, "[[85,69,≥3]]_2"),
    cmp(2, 4, 5, Tw, "[[85,61,5]]_2"),
    cmp(2, 4, 5, Nb, "[[85,61,≥5]]_2"),
    cmp(2, 4, 7, Tw, "[[85,53,7]]_2"),
    cmp(5, 2, 6, Nn, "[[104,86,≥6]]_5"),
    cmp(5, 2, 6, Tw, "[[104,86,6]]_5"),
    cmp(5, 2, 7, Nn, "[[104,82,≥7]]_5"),
    cmp(5, 2, 7, Tw, "[[104,82,7]]_5"),
    cmp(5, 2, 8, Nn, "[[104,78,≥8]]_5"),
    cmp(5, 2, 8, Tw, "[[104,78,8]]_5"),
    cmp(7, 2, 8, Nn, "[[300,274,≥8]]_7"),
    cmp(7, 2, 8, Tw, "[[300,274,8]]_7"),
    cmp(7, 2, 9, Nn, "[[300,270,≥9]]_7"),
    cmp(7, 2, 9, Tw, "[[300,270,9]]_7"),
    cmp(7, 2, 10, Nn, "[[300,266,≥10]]_7"),
    cmp(7, 2, 10, Tw, "[[300,266,10]]_7"),
    cmp(7, 2, 11, Nn, "[[300,262,≥11]]_7"),
    cmp(7, 2, 11, Tw, "[[300,262,11]]_7"),
    cmp(7, 2, 12, Nn, "[[300,258,≥12]]_7"),
    cmp(7, 2, 12, Tw, "[[300,258,12]]_7"),
    cmp(8, 2, 9, Nn, "[[455,425,≥9]]_8"),
    cmp(8, 2, 10, Nn, "[[455,421,≥10]]_8"),
    cmp(8, 2, 11, Nn, "[[455,417,≥11]]_8"),
    cmp(8, 2, 12, Nn, "[[455,413,≥12]]_8"),
    cmp(8, 2, 13, Nn, "[[455,409,≥13]]_8"),
    cmp(8, 2, 14, Nn, "[[455,405,≥14]]_8"),
    cmp(9, 2, 10, Nn, "[[656,622,≥10]]_9"),
    cmp(9, 2, 10, Tw, "[[656,622,10]]_9"),
    cmp(9, 2, 11, Nn, "[[656,618,≥11]]_9"),
    cmp(9, 2, 11, Tw, "[[656,618,11]]_9"),
    cmp(9, 2, 12, Nn, "[[656,614,≥12]]_9"),
    cmp(9, 2, 12, Tw, "[[656,614,12]]_9"),
    cmp(9, 2, 13, Nn, "[[656,610,≥13]]_9"),
    cmp(9, 2, 13, Tw, "[[656,610,13]]_9"),
    cmp(9, 2, 14, Nn, "[[656,606,≥14]]_9"),
    cmp(9, 2, 14, Tw, "[[656,606,14]]_9"),
    cmp(9, 2, 15, Nn, "[[656,602,≥15]]_9"),
    cmp(9, 2, 15, Tw, "[[656,602,15]]_9"),
    cmp(9, 2, 16, Nn, "[[656,598,≥16]]_9"),
    cmp(9, 2, 16, Tw, "[[656,598,16]]_9"),
];

pub fn published_rows(listing: Listing) -> impl Iterator<Item = &'static PublishedRow> {
    PUBLISHED.iter().filter(move |r| r.listing == listing)
}

pub fn comparisons_for(q: u64, m: u32, delta: u64) -> impl Iterator<Item = &'static Comparison> {
    COMPARISONS
        .iter()
        .filter(move |c| c.q == q && c.m == m && c.delta == delta)
}
