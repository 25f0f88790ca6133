#pragma once

#include <stdexcept>

namespace partdeck {

/// Base class of every typed error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/* Input validation. */
class RejectsNegative final : public Error { public: using Error::Error; };
class RejectsIncreasing final : public Error { public: using Error::Error; };
class InvalidCell final : public Error { public: using Error::Error; };
class ParseError final : public Error { public: using Error::Error; };

/* Arithmetic limits: 64-bit part/weight sums are checked, never wrapped. */
class Overflow final : public Error { public: using Error::Error; };

/* Diagram surgery. */
class NotContained final : public Error { public: using Error::Error; };
class NotAnInnerCorner final : public Error { public: using Error::Error; };
class NotAddable final : public Error { public: using Error::Error; };

/* Enumeration domains. */
class KTooLarge final : public Error { public: using Error::Error; };
class TargetTooSmall final : public Error { public: using Error::Error; };

/* Deck construction. */
class EmptyDeck final : public Error { public: using Error::Error; };
class MixedWeights final : public Error { public: using Error::Error; };

/* Reconstruction outcomes. */
class BoundNotMet final : public Error { public: using Error::Error; };
class InconsistentDeck final : public Error { public: using Error::Error; };
class AmbiguousDeck final : public Error { public: using Error::Error; };

}  // namespace partdeck
