; draining past zero violates the floor
(declare-var x Int)
(init (= x 3))
(trans (= x' (- x 1)))
(good (>= x 0))
