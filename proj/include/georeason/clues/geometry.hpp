// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 georeason contributors

#pragma once

namespace georeason::clues {

// Pixel box, top-left origin.
struct BoundingBox {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;

    bool valid() const { return w > 0 && h > 0; }
    long long area() const { return static_cast<long long>(w) * h; }

    bool operator==(const BoundingBox&) const = default;
};

// Intersection over union in [0,1]. Degenerate boxes score 0.
double iou(const BoundingBox& a, const BoundingBox& b);

// Clamps the box to [0,width) x [0,height); may become degenerate.
BoundingBox clamp_box(const BoundingBox& box, int width, int height);

}  // namespace georeason::clues
