public class ThreeIslands {
    private int width;
    private int height;
    private int depth;

    public ThreeIslands(int w, int h, int d) {
        width = w;
        height = h;
        depth = d;
    }

    public int scaleWidth(int f) {
        return width * f;
    }

    public int scaleHeight(int f) {
        return height * f;
    }

    public int scaleDepth(int f) {
        return depth * f;
    }
}
