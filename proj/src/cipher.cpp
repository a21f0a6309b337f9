#include "pixshuffle/cipher.hpp"

#include <string>

#include "pixshuffle/errors.hpp"
#include "pixshuffle/permutation.hpp"

namespace pixshuffle {

namespace {

ChannelOrder rotation_for(ChannelMode mode, std::uint64_t rounds) {
  if (mode == ChannelMode::none) return ChannelOrder::identity();
  return rotate_channels(ChannelOrder::identity(), rounds);
}

ImageMatrix shuffle(const ImageMatrix& img, const Permutation& spatial, const ChannelOrder& order) {
  const ChannelSet planes = split_channels(img);
  return merge_channels(apply_permutation(spatial, planes.red),
                        apply_permutation(spatial, planes.green),
                        apply_permutation(spatial, planes.blue), order);
}

}  // namespace

std::string_view to_string(ChannelMode mode) {
  return mode == ChannelMode::none ? "none" : "rotate";
}

ChannelMode parse_channel_mode(std::string_view text) {
  if (text == "none") return ChannelMode::none;
  if (text == "rotate") return ChannelMode::rotate;
  throw InvalidArgument("unknown channel mode '" + std::string(text) + "'");
}

KeyMaterial resolve_key(const ImageMatrix& img, const CipherConfig& cfg) {
  KeyMaterial key = derive_key(img);
  if (cfg.key_override) {
    if (*cfg.key_override < 1) throw InvalidArgument("key override must be >= 1");
    key.iterations = *cfg.key_override;
  }
  return key;
}

EncryptionResult encrypt(const ImageMatrix& img, const CipherConfig& cfg) {
  KeyMaterial key = resolve_key(img, cfg);
  const Permutation spatial =
      permutation_power(transpose_reshape_permutation(img.rows(), img.cols()), key.iterations);
  return {shuffle(img, spatial, rotation_for(cfg.mode, key.iterations)), key};
}

ImageMatrix decrypt(const ImageMatrix& img, const CipherConfig& cfg) {
  const KeyMaterial key = resolve_key(img, cfg);
  const Permutation spatial = invert_permutation(
      permutation_power(transpose_reshape_permutation(img.rows(), img.cols()), key.iterations));
  // undo a left rotation by s with a left rotation by 3 - s
  const std::uint64_t undo = (3 - key.iterations % 3) % 3;
  return shuffle(img, spatial, rotation_for(cfg.mode, undo));
}

}  // namespace pixshuffle
