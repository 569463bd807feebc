; phase 0 keeps x = y, phase 1 lets x run ahead
(declare-var x Int)
(declare-var y Int)
(declare-var p Int)
(init (and (= x 0) (= y 0) (= p 0)))
(trans (or (and (= p 0) (= x' (+ x 1)) (= y' (+ y 1)) (= p' 0))
           (and (= p 0) (= x' x) (= y' y) (= p' 1))
           (and (= p 1) (= x' (+ x 2)) (= y' y) (= p' 1))))
(good (and (or (not (= p 0)) (= x y))
           (or (not (= p 1)) (>= x y))))
