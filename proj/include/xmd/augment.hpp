#pragma once

#include <span>
#include <vector>

#include "xmd/rng.hpp"
#include "xmd/synth_data.hpp"

namespace xmd {

// One per-channel tone function g -> clip(a * g^gamma, 0, 1). Monotone in g
// for a >= 0, gamma > 0.
struct ChannelTone {
    double a = 1.0;
    double gamma = 1.0;
    double operator()(double g) const;
};

// Maps a gray value to a pseudo-color (r, g, b).
struct Colormap {
    ChannelTone r, g, b;
};

// Three fixed monotone maps used for infrared pseudo-coloring.
const std::vector<Colormap>& default_colormaps();

// Deterministic core of the infrared augmentation: output channel R is the
// R-channel of maps[jr] applied to the gray plane, likewise G and B.
SynthImage apply_colormap_channels(const SynthImage& img, std::size_t jr, std::size_t jg,
                                   std::size_t jb, std::span<const Colormap> maps);

// Channel-wise sampling over the pseudo-color stack: each output channel picks
// its colormap index independently. Throws NotInfraredError on visible input.
SynthImage augment_infrared(const SynthImage& img, std::span<const Colormap> maps, Rng& rng);

// Deterministic cores of the visible augmentation.
SynthImage apply_channel_perm(const SynthImage& img, const std::array<int, 3>& perm);
SynthImage apply_grayscale_channel(const SynthImage& img, int channel);

// Channel multiplexing: with probability 1/4 all output channels are one
// uniformly sampled input channel; otherwise each output channel is an
// independently sampled input channel. Throws NotVisibleError on infrared.
SynthImage augment_visible(const SynthImage& img, Rng& rng);

// Deterministic cores of the geometric augmentations.
SynthImage flip_horizontal(const SynthImage& img);
SynthImage pad1_crop(const SynthImage& img, int dx, int dy);  // dx, dy in {0,1,2}
SynthImage erase_rect(const SynthImage& img, int x, int y, int w, int h, float value = 0.5f);

// Horizontal flip (p=0.5), pad-by-1 then random crop, and random erasing of a
// rectangle covering 10-25% of the image to 0.5 (p=0.5).
SynthImage standard_augment(const SynthImage& img, Rng& rng);

}  // namespace xmd
