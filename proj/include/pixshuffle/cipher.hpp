#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "pixshuffle/image.hpp"
#include "pixshuffle/keying.hpp"

namespace pixshuffle {

enum class ChannelMode {
  none,    ///< spatial shuffle only; each channel keeps its own sample multiset
  rotate,  ///< after each shuffle, (R,G,B) <- (G,B,R)
};

std::string_view to_string(ChannelMode mode);
/// Accepts "none" or "rotate"; throws InvalidArgument otherwise.
ChannelMode parse_channel_mode(std::string_view text);

struct CipherConfig {
  ChannelMode mode = ChannelMode::rotate;
  /// Replaces the derived iteration count Sk. Must be >= 1.
  std::optional<std::uint64_t> key_override;
};

struct EncryptionResult {
  ImageMatrix image;
  KeyMaterial key;
};

/// Key actually used for `img` under `cfg`: derived statistics, with Sk
/// replaced by the override when one is set.
KeyMaterial resolve_key(const ImageMatrix& img, const CipherConfig& cfg);

/// Sk rounds of (transpose-reshape every channel, then optionally rotate the
/// channel labels), executed as one application of P^Sk and a rotation by Sk mod 3.
EncryptionResult encrypt(const ImageMatrix& img, const CipherConfig& cfg = {});

/// Inverse of encrypt. The key is recomputed from the ciphered image itself.
ImageMatrix decrypt(const ImageMatrix& img, const CipherConfig& cfg = {});

}  // namespace pixshuffle
