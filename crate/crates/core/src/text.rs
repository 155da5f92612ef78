//! Strings over a byte alphabet with one distinguished wildcard byte.
//!
//! A [`WildcardText`] stores the rank-compacted symbols together with the
//! positional structure every query algorithm needs: wildcard groups,
//! transition positions and the `nextpos` hop array. A [`SelectionScheme`]
//! picks every `t`-th transition position (plus the last position) and
//! stores the matching `nextsel` hop array.
//!
//! Positions in the public API are 1-based; storage is 0-based.

use crate::error::{Error, Result};

/// Wildcard byte used when none is configured.
pub const DEFAULT_WILDCARD: u8 = b'?';

/// One text symbol: either the wildcard (code 0) or an alphabet rank `>= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(transparent)]
pub struct Symbol(u32);

impl Symbol {
    pub const WILDCARD: Symbol = Symbol(0);

    /// Symbol for an alphabet rank. Rank 0 is reserved for the wildcard.
    pub fn rank(rank: u32) -> Symbol {
        assert!(rank >= 1, "alphabet ranks start at 1");
        Symbol(rank)
    }

    #[inline]
    pub fn is_wildcard(self) -> bool {
        self.0 == 0
    }

    /// Raw code: 0 for the wildcard, otherwise the rank.
    #[inline]
    pub fn code(self) -> u32 {
        self.0
    }
}

/// The match relation: equal symbols match, and the wildcard matches anything.
///
/// Reflexive and symmetric but not transitive.
#[inline]
pub fn sym_match(a: Symbol, b: Symbol) -> bool {
    a == b || a.is_wildcard() || b.is_wildcard()
}

/// Byte <-> rank table. Ranks are dense and follow byte order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    wildcard: u8,
    rank_of: [u32; 256],
    bytes: Vec<u8>,
}

impl Alphabet {
    fn from_bytes(raw: &[u8], wildcard: u8) -> Alphabet {
        let mut present = [false; 256];
        for &b in raw {
            present[b as usize] = true;
        }
        present[wildcard as usize] = false;
        let mut rank_of = [0u32; 256];
        let mut bytes = Vec::new();
        for b in 0..=255u8 {
            if present[b as usize] {
                bytes.push(b);
                rank_of[b as usize] = bytes.len() as u32;
            }
        }
        Alphabet { wildcard, rank_of, bytes }
    }

    pub fn wildcard(&self) -> u8 {
        self.wildcard
    }

    /// Number of distinct non-wildcard symbols.
    pub fn sigma(&self) -> u32 {
        self.bytes.len() as u32
    }

    pub fn symbol_of(&self, byte: u8) -> Option<Symbol> {
        if byte == self.wildcard {
            return Some(Symbol::WILDCARD);
        }
        match self.rank_of[byte as usize] {
            0 => None,
            r => Some(Symbol(r)),
        }
    }

    pub fn byte_of(&self, sym: Symbol) -> u8 {
        if sym.is_wildcard() {
            self.wildcard
        } else {
            self.bytes[sym.0 as usize - 1]
        }
    }
}

/// An immutable string with wildcards and its precomputed positional structure.
#[derive(Clone, Debug)]
pub struct WildcardText {
    symbols: Vec<Symbol>,
    alphabet: Alphabet,
    wildcard_count: usize,
    group_count: usize,
    /// 1-based, ascending; always ends with `n`.
    transitions: Vec<usize>,
    /// `nextpos[k]` is the distance from 0-based position `k` to the next transition.
    nextpos: Vec<u32>,
}

/// Builds a [`WildcardText`] from raw bytes.
pub fn build_text(raw: &[u8], wildcard: u8) -> Result<WildcardText> {
    WildcardText::new(raw, wildcard)
}

impl WildcardText {
    pub fn new(raw: &[u8], wildcard: u8) -> Result<WildcardText> {
        if raw.is_empty() {
            return Err(Error::EmptyText);
        }
        if raw.len() > i32::MAX as usize {
            return Err(Error::TextTooLong(raw.len()));
        }
        let alphabet = Alphabet::from_bytes(raw, wildcard);
        let n = raw.len();
        let mut symbols = Vec::with_capacity(n);
        let mut transitions = Vec::new();
        let mut wildcard_count = 0;
        let mut group_count = 0;
        let mut prev_wild = false;
        for (k, &b) in raw.iter().enumerate() {
            let s = alphabet.symbol_of(b).expect("every byte is ranked");
            let wild = s.is_wildcard();
            if wild {
                wildcard_count += 1;
                if !prev_wild {
                    group_count += 1;
                }
            }
            if k + 1 == n || (k > 0 && prev_wild && !wild) {
                transitions.push(k + 1);
            }
            symbols.push(s);
            prev_wild = wild;
        }

        let mut nextpos = vec![0u32; n];
        let mut ti = transitions.len();
        for k in (0..n).rev() {
            if ti > 0 && transitions[ti - 1] == k + 1 {
                ti -= 1;
                nextpos[k] = 0;
            } else {
                nextpos[k] = nextpos[k + 1] + 1;
            }
        }

        Ok(WildcardText {
            symbols,
            alphabet,
            wildcard_count,
            group_count,
            transitions,
            nextpos,
        })
    }

    /// Parses a string, using `wildcard` as the wildcard character.
    pub fn from_str_with(s: &str, wildcard: u8) -> Result<WildcardText> {
        WildcardText::new(s.as_bytes(), wildcard)
    }

    /// Concatenation `self · other`. Both texts must share the wildcard byte.
    pub fn concat(&self, other: &WildcardText) -> Result<WildcardText> {
        let (w1, w2) = (self.alphabet.wildcard, other.alphabet.wildcard);
        if w1 != w2 {
            return Err(Error::WildcardMismatch(w1, w2));
        }
        let mut raw = self.to_bytes();
        raw.extend(other.to_bytes());
        WildcardText::new(&raw, w1)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    /// Always false: construction rejects empty input.
    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// Symbol at 1-based position `i`.
    pub fn sym(&self, i: usize) -> Symbol {
        self.symbols[i - 1]
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn sigma(&self) -> u32 {
        self.alphabet.sigma()
    }

    pub fn wildcard(&self) -> u8 {
        self.alphabet.wildcard
    }

    /// `D`: number of wildcard positions.
    pub fn wildcard_count(&self) -> usize {
        self.wildcard_count
    }

    /// `G`: number of maximal wildcard runs.
    pub fn group_count(&self) -> usize {
        self.group_count
    }

    /// Transition positions (1-based, ascending, last one is `n`).
    pub fn transitions(&self) -> &[usize] {
        &self.transitions
    }

    /// Distance from 1-based `i` to the next transition position.
    pub fn nextpos(&self, i: usize) -> usize {
        self.nextpos[i - 1] as usize
    }

    pub(crate) fn nextpos0(&self) -> &[u32] {
        &self.nextpos
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        self.symbols.iter().map(|&s| self.alphabet.byte_of(s)).collect()
    }

    /// Codes of `T_#`: the wildcard becomes the fresh symbol `sigma + 1`.
    pub fn hash_codes(&self) -> Vec<u32> {
        let fresh = self.sigma() + 1;
        self.symbols
            .iter()
            .map(|s| if s.is_wildcard() { fresh } else { s.code() })
            .collect()
    }
}

const NOT_SELECTED: u32 = u32::MAX;

/// Every `t`-th transition position plus `n`.
#[derive(Clone, Debug)]
pub struct SelectionScheme {
    t: usize,
    /// 1-based, ascending; ends with `n`.
    selected: Vec<usize>,
    nextsel: Vec<u32>,
    /// Row index of each 0-based position, or `NOT_SELECTED`.
    row: Vec<u32>,
}

/// Builds the selection for tradeoff parameter `t`.
pub fn build_selection(text: &WildcardText, t: usize) -> Result<SelectionScheme> {
    SelectionScheme::new(text, t)
}

impl SelectionScheme {
    pub fn new(text: &WildcardText, t: usize) -> Result<SelectionScheme> {
        SelectionScheme::with_forced(text, t, &[])
    }

    /// Like [`SelectionScheme::new`], with the extra 1-based positions in `forced`
    /// also selected.
    pub fn with_forced(text: &WildcardText, t: usize, forced: &[usize]) -> Result<SelectionScheme> {
        if t < 1 {
            return Err(Error::InvalidParameter(format!("t must be at least 1, got {t}")));
        }
        let n = text.len();
        for &f in forced {
            if f < 1 || f > n {
                return Err(Error::OutOfRange { index: f, len: n });
            }
        }
        let tr = text.transitions();
        let mut selected: Vec<usize> = tr.iter().copied().step_by(t).collect();
        selected.push(n);
        selected.extend_from_slice(forced);
        selected.sort_unstable();
        selected.dedup();

        let mut row = vec![NOT_SELECTED; n];
        for (r, &p) in selected.iter().enumerate() {
            row[p - 1] = r as u32;
        }
        let mut nextsel = vec![0u32; n];
        for k in (0..n).rev() {
            nextsel[k] = if row[k] != NOT_SELECTED { 0 } else { nextsel[k + 1] + 1 };
        }
        Ok(SelectionScheme { t, selected, nextsel, row })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Selected positions, 1-based and ascending.
    pub fn selected(&self) -> &[usize] {
        &self.selected
    }

    /// `λ`: the number of selected positions.
    pub fn lambda(&self) -> usize {
        self.selected.len()
    }

    /// Distance from 1-based `i` to the next selected position.
    pub fn nextsel(&self, i: usize) -> usize {
        self.nextsel[i - 1] as usize
    }

    pub fn is_selected(&self, i: usize) -> bool {
        self.row[i - 1] != NOT_SELECTED
    }

    /// Row index (0-based rank among selected positions) of 1-based `i`.
    pub fn row_of(&self, i: usize) -> Option<usize> {
        match self.row[i - 1] {
            NOT_SELECTED => None,
            r => Some(r as usize),
        }
    }

    #[inline]
    pub(crate) fn nextsel0(&self, k: usize) -> usize {
        self.nextsel[k] as usize
    }

    #[inline]
    pub(crate) fn row0(&self, k: usize) -> Option<usize> {
        match self.row[k] {
            NOT_SELECTED => None,
            r => Some(r as usize),
        }
    }
}
