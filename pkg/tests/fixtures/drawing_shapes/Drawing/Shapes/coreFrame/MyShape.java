package Drawing.Shapes.coreFrame;

import java.awt.Color;
import java.awt.Graphics;

/**
 * Base class for every shape the panel can draw. Keeps the two anchor
 * points and the pen color; subclasses decide how to render them.
 */
public class MyShape {

    protected int x1;
    protected int y1;
    protected int x2;
    protected int y2;
    protected Color color;

    public MyShape(int x1, int y1, int x2, int y2, Color color) {
        this.x1 = x1;
        this.y1 = y1;
        this.x2 = x2;
        this.y2 = y2;
        this.color = color;
    }

    public int getX1() {
        return this.x1;
    }

    public void setX1(int x1) {
        this.x1 = x1;
    }

    public int getY1() {
        return this.y1;
    }

    public void setY1(int y1) {
        this.y1 = y1;
    }

    public int getX2() {
        return this.x2;
    }

    public void setX2(int x2) {
        this.x2 = x2;
    }

    public int getY2() {
        return this.y2;
    }

    public void setY2(int y2) {
        this.y2 = y2;
    }

    public Color getColor() {
        return this.color;
    }

    public void setColor(Color color) {
        this.color = color;
    }

    public void draw(Graphics g) {
        // base shape has no outline of its own
        g.setColor(this.color);
    }
}
