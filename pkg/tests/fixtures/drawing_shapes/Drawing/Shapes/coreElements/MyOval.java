package Drawing.Shapes.coreElements;

import Drawing.Shapes.coreFrame.MyShape;
import java.awt.Color;
import java.awt.Graphics;

/**
 * An oval drawn inside the bounding box of the two anchor points.
 */
public class MyOval extends MyShape {

    public MyOval(int x1, int y1, int x2, int y2, Color color) {
        this.x1 = x1;
        this.y1 = y1;
        this.x2 = x2;
        this.y2 = y2;
        this.color = color;
    }

    public void draw(Graphics g) {
        g.setColor(this.color);
        g.drawOval(this.x1, this.y1, this.x2 - this.x1, this.y2 - this.y1);
    }
}
